"""Cyclic right modules A/J over A = K_n or A = R, and induced modules.

Filtration dimensions are dim M_m = dim A_m - dim(J' cap A_m) where J' is
the span of the products g*w for relations g and basis monomials w of A up
to level ``m_max + slack``.  Since J' lies inside J, the numbers are upper
bounds for the true dimensions; they are exact for principal relation
ideals over K_n and become exact for any presentation once the slack is
large enough.  Growth degrees should only be read from stabilized tails
(see :mod:`gkdim.growth`).

Vectors use column keys (level, x-degree, exponent) so that the pivot of
an echelon row is its highest-level monomial.  Rows with pivot level <= m
then span exactly J' cap A_m.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from math import comb

from .errors import AmbientMismatch, ResourceLimit
from .growth import DimensionSequence
from .laurent import LaurentPoly, LaurentRing, l1_ball
from .linalg import EchelonBasis
from .ore import OreRing, from_vector, ore_basis, ore_key, ore_mul

DEFAULT_SLACK = 1
DEFAULT_MAX_ROWS = 200_000


def algebra_basis(algebra, m):
    """Monomial keys spanning A_m, as (exponent, x-degree) pairs."""
    if isinstance(algebra, LaurentRing):
        return [(a, 0) for a in l1_ball(algebra.n, m)]
    return ore_basis(algebra.n, m)


def algebra_dim(algebra, m):
    return len(algebra_basis(algebra, m))


def to_vector(elem):
    if isinstance(elem, LaurentPoly):
        return {ore_key(a, 0): c for a, c in elem.terms.items()}
    return elem.to_vector()


def vector_to_element(algebra, vec):
    if isinstance(algebra, LaurentRing):
        return LaurentPoly(algebra, {a: c for (_, _, a), c in vec.items()})
    return from_vector(algebra, vec)


def monomial(algebra, a, i=0):
    if isinstance(algebra, LaurentRing):
        return algebra.monomial(a)
    return algebra.monomial(a, i)


def multiply(algebra, u, v):
    if isinstance(algebra, LaurentRing):
        return u * v
    return ore_mul(u, v)


def level_drop(g):
    """How far below level(w) the product g * w can fall.

    For a Laurent polynomial this is -min_s max_{a in supp g} s.a over sign
    vectors s, which bounds level(w) - level(g * w) exactly.  For an Ore
    element the bound of the top coefficient is used, less its x-degree.
    """
    if isinstance(g, LaurentPoly):
        n = g.ring.n
        support = list(g.terms)
        worst = min(
            max(sum(si * ai for si, ai in zip(s, a)) for a in support)
            for s in product((1, -1), repeat=n)
        )
        return max(0, -worst)
    return max(0, level_drop(g.coeffs[-1]) - g.deg_x)


class _RelationSpan:
    """Echelon basis of J' = span{g * w : w in A_(top + level_drop(g))}.

    Every g * w of level <= top is among the rows.
    """

    def __init__(self, pres, top, max_rows):
        algebra = pres.algebra
        plan = [(g, algebra_basis(algebra, top + level_drop(g))) for g in pres.relations]
        nrows = sum(len(basis) for _, basis in plan)
        if nrows > max_rows:
            raise ResourceLimit(f"{nrows} relation rows exceed the cap of {max_rows}")
        self.top = top
        self.echelon = EchelonBasis()
        for g, basis in plan:
            for a, i in basis:
                self.echelon.add(to_vector(multiply(algebra, g, monomial(algebra, a, i))))

    def count_upto(self, m):
        return sum(1 for p in self.echelon.pivots() if p[0] <= m)


@dataclass(frozen=True, eq=False)
class ModulePresentation:
    """The cyclic right module A/J with J generated by ``relations``.

    ``algebra`` is a :class:`LaurentRing` (over = "K") or an
    :class:`OreRing` (over = "R").
    """

    algebra: object
    relations: tuple = ()
    name: str = ""
    _spans: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        rels = tuple(r for r in (self.algebra(g) for g in self.relations) if r)
        object.__setattr__(self, "relations", rels)

    @property
    def over(self):
        return "K" if isinstance(self.algebra, LaurentRing) else "R"

    @property
    def n(self):
        return self.algebra.n

    def relation_span(self, top, max_rows=DEFAULT_MAX_ROWS):
        for t, span in self._spans.items():
            if t >= top:
                return span
        span = _RelationSpan(self, top, max_rows)
        self._spans.clear()
        self._spans[top] = span
        return span

    def filtration_dims(self, m_max, slack=DEFAULT_SLACK, max_rows=DEFAULT_MAX_ROWS):
        return module_filtration_dims(self, m_max, slack=slack, max_rows=max_rows)

    def reduce(self, elem, max_rows=DEFAULT_MAX_ROWS):
        """Canonical coset representative of elem."""
        elem = self.algebra(elem)
        if not self.relations:
            return elem
        span = self.relation_span(elem.level + DEFAULT_SLACK, max_rows)
        return vector_to_element(self.algebra, span.echelon.reduce(to_vector(elem)))

    def with_relations(self, extra, name=""):
        return ModulePresentation(self.algebra, self.relations + tuple(extra), name)

    def __repr__(self):
        rels = ", ".join(str(r) for r in self.relations)
        return f"ModulePresentation(over={self.over}, relations=[{rels}])"


def module_filtration_dims(p, m_max, slack=DEFAULT_SLACK, max_rows=DEFAULT_MAX_ROWS):
    """dim M_m for m = 0..m_max."""
    if m_max < 0:
        raise ValueError("m_max must be >= 0")
    A = p.algebra
    full = [algebra_dim(A, m) for m in range(m_max + 1)]
    source = f"{p.name or 'module'} over {p.over}"
    if not p.relations:
        return DimensionSequence(tuple(full), source)
    span = p.relation_span(m_max + slack, max_rows)
    counts = [0] * (m_max + 1)
    for piv in span.echelon.pivots():
        if piv[0] <= m_max:
            counts[piv[0]] += 1
    dims, inside = [], 0
    for m in range(m_max + 1):
        inside += counts[m]
        dims.append(full[m] - inside)
    return DimensionSequence(tuple(dims), source)


def submodule_filtration_dims(p, generator, m_max, slack=DEFAULT_SLACK, max_rows=DEFAULT_MAX_ROWS):
    """Filtration dims of the submodule of A/J generated by the coset of ``generator``.

    Level m is the image of generator * A_m.
    """
    A = p.algebra
    c = A(generator)
    top = m_max + c.level + slack
    work = p.relation_span(top, max_rows).echelon.copy() if p.relations else EchelonBasis()
    dims, rank = [], 0
    seen = 0
    basis = algebra_basis(A, m_max)
    for m in range(m_max + 1):
        while seen < len(basis) and sum(map(abs, basis[seen][0])) + basis[seen][1] <= m:
            a, i = basis[seen]
            if work.add(to_vector(multiply(A, c, monomial(A, a, i)))):
                rank += 1
            seen += 1
        dims.append(rank)
    return DimensionSequence(tuple(dims), f"submodule generated by {c}")


def quotient_presentation(p, generator):
    """M/N for N the submodule generated by the coset of ``generator``."""
    return p.with_relations([generator], name=f"{p.name or 'module'}/({generator})")


def coset_act(p, elem, r):
    """Right action of an algebra element on a coset representative."""
    A = p.algebra
    elem, r = A(elem), A(r)
    return p.reduce(multiply(A, elem, r))


@dataclass(frozen=True, eq=False)
class InducedModule:
    """N (x)_{K_n} R, with underlying K-space (+)_i N x^i.

    Elements are dicts {i: coset representative in N}.
    """

    base: ModulePresentation
    derivation: object

    def __post_init__(self):
        if self.base.over != "K":
            raise AmbientMismatch("induce needs a module over K_n")
        if self.derivation.ring is not self.base.algebra:
            raise AmbientMismatch("derivation and base module live over different rings")

    @property
    def ring(self):
        return OreRing(self.derivation)

    def presentation(self):
        """The same module as R/(relations of N)R."""
        R = self.ring
        return ModulePresentation(R, tuple(R(g) for g in self.base.relations), f"induced({self.base.name})")

    def generator(self):
        return {0: self.base.algebra.one}

    def act(self, vec, r):
        """(v x^i) x = v x^(i+1); (v x^i) a = sum_j C(i,j) (v delta^j(a)) x^(i-j)."""
        R = self.ring
        r = R(r)
        out = {}
        d = self.derivation
        for k, a in enumerate(r.coeffs):
            if not a:
                continue
            derivs = [a]
            part = {}
            for i, v in vec.items():
                while len(derivs) <= i:
                    derivs.append(d(derivs[-1]))
                for j in range(i + 1):
                    if not derivs[j]:
                        break
                    t = v * derivs[j] * comb(i, j)
                    part[i - j] = part.get(i - j, 0) + t
            for i, v in part.items():
                out[i + k] = out.get(i + k, 0) + v
        base = self.base
        reduced = {}
        for i, v in out.items():
            v = base.reduce(base.algebra(v))
            if v:
                reduced[i] = v
        return reduced

    def to_ore(self, vec):
        """Representative in R of an element of the induced module."""
        R = self.ring
        top = max(vec, default=-1)
        return R.from_coeffs([vec.get(i, self.base.algebra.zero) for i in range(top + 1)])


def induce(base, d):
    return InducedModule(base, d)


def induced_filtration_dims(im, m_max, slack=DEFAULT_SLACK, max_rows=DEFAULT_MAX_ROWS):
    """Filtration dims of N (x) R, computed from its presentation R/(relations of N)R.

    These equal the partial sums of N's own dims; the tests check that.
    """
    return module_filtration_dims(im.presentation(), m_max, slack=slack, max_rows=max_rows)
