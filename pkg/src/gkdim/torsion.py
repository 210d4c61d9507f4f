"""Torsion over coordinate subalgebras and the Brookes-Groves dimension.

A cyclic module N = K_n/I is torsion over k[x_i^{+-1} : i in S] exactly
when I meets that subalgebra in a nonzero element.  The intersection is
computed by Groebner elimination in k[x_1..x_n, y_1..y_n]/(x_i y_i - 1),
where y_i stands for x_i^{-1}.

Variable subsets use 1-based indices, matching the names x1..xn.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .errors import AmbientMismatch, DegreeUnstable, GkdimError
from .groebner import DEFAULT_DEGREE_CAP, block_order, grevlex_key, groebner, is_member
from .growth import UNSTABLE, default_m_max, gk_estimate
from .laurent import LaurentPoly, LaurentRing
from .modpres import ModulePresentation, module_filtration_dims

DEFAULT_SUBSET_CAP = 6


@dataclass(frozen=True, eq=False)
class LaurentIdealPresentation:
    """Generators of an ideal I of K_n; presents N = K_n/I."""

    ring: LaurentRing
    generators: tuple = ()
    _cache: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        gens = tuple(g for g in (self.ring(g) for g in self.generators) if g)
        object.__setattr__(self, "generators", gens)

    @classmethod
    def from_module(cls, p):
        if p.over != "K":
            raise AmbientMismatch("torsion analysis needs a module over K_n")
        return cls(p.algebra, p.relations)

    def module(self, name=""):
        return ModulePresentation(self.ring, self.generators, name)

    @property
    def n(self):
        return self.ring.n

    def __repr__(self):
        return f"LaurentIdealPresentation(n={self.n}, [{', '.join(map(str, self.generators))}])"


def lift(f):
    """Polynomial representative in k[x, y]: x_i^-a becomes y_i^a."""
    out = {}
    for e, c in f.terms.items():
        ex = tuple(max(a, 0) for a in e) + tuple(max(-a, 0) for a in e)
        out[ex] = c
    return out


def lower(p, ring):
    """Image of a k[x, y] polynomial in K_n."""
    n = ring.n
    terms = {}
    for ex, c in p.items():
        e = tuple(ex[i] - ex[n + i] for i in range(n))
        v = terms.get(e, 0) + c
        if v:
            terms[e] = v
        else:
            terms.pop(e, None)
    return LaurentPoly(ring, terms)


def _units(n, field):
    # x_i * y_i - 1
    out = []
    for i in range(n):
        e = [0] * (2 * n)
        e[i] = 1
        e[n + i] = 1
        out.append({tuple(e): field.one, (0,) * (2 * n): -field.one})
    return out


def _check_subset(S, n):
    S = frozenset(S)
    if not S <= frozenset(range(1, n + 1)):
        raise ValueError(f"variable subset {sorted(S)} not contained in 1..{n}")
    return S


def lifted_groebner(I, S=None, degree_cap=DEFAULT_DEGREE_CAP):
    """Groebner basis of the lifted ideal, eliminating every variable outside S.

    With S=None a plain grevlex basis is returned.  Returns (basis, key).
    """
    n = I.n
    if S is None:
        key = grevlex_key
    else:
        keep = {i - 1 for i in S} | {n + i - 1 for i in S}
        key = block_order(2 * n, [j for j in range(2 * n) if j not in keep])
    cache_key = (None if S is None else frozenset(S), degree_cap)
    if cache_key not in I._cache:
        F = [lift(g) for g in I.generators] + _units(n, I.ring.field)
        I._cache[cache_key] = groebner(F, key, degree_cap)
    return I._cache[cache_key], key


def eliminate(I, S, degree_cap=DEFAULT_DEGREE_CAP):
    """Nonzero generators of I cap k[x_i^{+-1} : i in S]."""
    S = _check_subset(S, I.n)
    if not I.generators:
        return []
    n = I.n
    G, _ = lifted_groebner(I, S, degree_cap)
    allowed = {i - 1 for i in S} | {n + i - 1 for i in S}
    out = []
    for g in G:
        if all(all(e[j] == 0 for j in range(2 * n) if j not in allowed) for e in g):
            f = lower(g, I.ring)
            if f:
                f = normalize_associate(f)
                if f not in out:
                    out.append(f)
    return out


def normalize_associate(f):
    """The associate of f with nonnegative, minimal exponents and leading coefficient 1."""
    n = f.ring.n
    low = tuple(min(e[i] for e in f.terms) for i in range(n))
    shifted = {tuple(a - b for a, b in zip(e, low)): c for e, c in f.terms.items()}
    g = LaurentPoly(f.ring, shifted)
    _, lc = g.sorted_terms()[0]
    return g * (1 / lc)


def is_torsion_over(I, S, degree_cap=DEFAULT_DEGREE_CAP):
    return bool(eliminate(I, S, degree_cap))


def contains(I, f, degree_cap=DEFAULT_DEGREE_CAP):
    """Ideal membership of a Laurent polynomial in I."""
    G, key = lifted_groebner(I, None, degree_cap)
    return is_member(lift(I.ring(f)), G, key)


@dataclass(frozen=True)
class TorsionProfile:
    """Torsion verdict per variable subset, plus the Brookes-Groves number.

    ``bg_t`` is -1 for the zero module (torsion even over k).
    """

    n: int
    torsion: dict
    bg_t: int

    def not_torsion_subsets(self):
        return [S for S, t in self.torsion.items() if not t]

    def as_dict(self):
        def name(S):
            return "{" + ",".join(str(i) for i in sorted(S)) + "}"

        ordered = sorted(self.torsion, key=lambda S: (len(S), sorted(S)))
        return {
            "n": self.n,
            "bg_t": self.bg_t,
            "profile": {name(S): ("Torsion" if self.torsion[S] else "NotTorsion") for S in ordered},
        }


def brookes_groves_t(I, degree_cap=DEFAULT_DEGREE_CAP, max_n=DEFAULT_SUBSET_CAP):
    """Evaluate torsion over every coordinate subalgebra; bg_t = largest non-torsion subset size."""
    n = I.n
    if n > max_n:
        raise GkdimError(f"subset enumeration for n={n} exceeds the cap n <= {max_n}")
    torsion = {}
    for size in range(n + 1):
        for S in combinations(range(1, n + 1), size):
            torsion[frozenset(S)] = is_torsion_over(I, S, degree_cap)
    bg_t = max((len(S) for S, t in torsion.items() if not t), default=-1)
    return TorsionProfile(n, torsion, bg_t)


def restrict(I, S, degree_cap=DEFAULT_DEGREE_CAP):
    """I cap K_S as an ideal of a Laurent ring in |S| variables (renumbered in order).

    Presents the K_S-submodule of K_n/I generated by the cyclic generator.
    """
    S = sorted(_check_subset(S, I.n))
    if not S:
        raise ValueError("restriction needs a nonempty variable subset")
    sub = LaurentRing(len(S), I.ring.field)
    gens = []
    for f in eliminate(I, S, degree_cap):
        gens.append(LaurentPoly(sub, {tuple(e[i - 1] for i in S): c for e, c in f.terms.items()}))
    return LaurentIdealPresentation(sub, tuple(gens))


@dataclass(frozen=True)
class CriticalityVerdict:
    candidate: LaurentPoly
    module_degree: int
    quotient_degree: int
    passed: bool

    @property
    def verdict(self):
        return "Pass" if self.passed else "Fail"


def _dimension(I, m_max, window):
    rep = gk_estimate(module_filtration_dims(I.module(), m_max), window)
    return rep.dimension


def criticality_witness(I, candidates, m_max=None, window=3, degree_cap=DEFAULT_DEGREE_CAP):
    """Check gk(N/cN) < gk(N) for each candidate c; certifies the tested candidates only."""
    if m_max is None:
        m_max = default_m_max(I.n)
    base = _dimension(I, m_max, window)
    out = []
    for c in candidates:
        c = I.ring(c)
        if contains(I, c, degree_cap):
            raise ValueError(f"candidate {c} is zero modulo the ideal")
        q = LaurentIdealPresentation(I.ring, I.generators + (c,))
        qd = _dimension(q, m_max, window)
        if base is UNSTABLE or qd is UNSTABLE:
            raise DegreeUnstable("growth estimate did not stabilize")
        out.append(CriticalityVerdict(c, base, qd, qd < base))
    return out
