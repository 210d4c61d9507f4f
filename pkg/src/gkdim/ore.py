"""The Ore extension R = K_n[x, delta].

Elements are kept in the normal form sum_i a_i x^i with Laurent
coefficients on the left.  Multiplication uses the commutation rule
x a = a x + delta(a), i.e. x^i a = sum_j C(i, j) delta^j(a) x^(i-j).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from numbers import Rational as _RationalABC

from .errors import AmbientMismatch, DerivationMismatch, ResourceLimit
from .laurent import (
    DerivationSpec,
    LaurentPoly,
    _monomial_str,
    filtration_dim_K,
    format_terms,
    l1_ball,
    l1_norm,
)
from .linalg import EchelonBasis
from .scalars import RationalFunction

DEFAULT_WORD_CAP = 10**7


def ore_key(a, i):
    """Column key of the monomial x^a * x^i: level, then x-degree, then a."""
    return (l1_norm(a) + i, i, a)


class OreRing:
    """K_n[x, delta] for a fixed :class:`DerivationSpec`."""

    _cache: dict = {}

    def __new__(cls, derivation):
        inst = cls._cache.get(derivation)
        if inst is None:
            inst = super().__new__(cls)
            inst.derivation = derivation
            cls._cache[derivation] = inst
        return inst

    def __reduce__(self):
        return (OreRing, (self.derivation,))

    @property
    def base(self):
        return self.derivation.ring

    @property
    def n(self):
        return self.base.n

    @property
    def field(self):
        return self.base.field

    def __repr__(self):
        return f"OreRing({self.derivation!r})"

    @property
    def zero(self):
        return OreElement(self, ())

    @property
    def one(self):
        return OreElement(self, (self.base.one,))

    @property
    def x(self):
        return OreElement(self, (self.base.zero, self.base.one))

    def gen(self, i, power=1):
        return self(self.base.gen(i, power))

    def monomial(self, a, i, coeff=1):
        coeffs = [self.base.zero] * i + [self.base.monomial(a, coeff)]
        return OreElement(self, tuple(coeffs))

    def __call__(self, value):
        if isinstance(value, OreElement):
            if value.ring is not self:
                raise DerivationMismatch(f"{value.ring!r} element used in {self!r}")
            return value
        if isinstance(value, str):
            from .parser import parse_expression

            return parse_expression(value, self)
        return OreElement(self, (self.base(value),))

    def from_coeffs(self, coeffs):
        return OreElement(self, tuple(self.base(c) for c in coeffs))


def _trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return tuple(coeffs)


class OreElement:
    """sum_i coeffs[i] * x^i; treat as immutable."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring, coeffs):
        self.ring = ring
        self.coeffs = _trim(coeffs)

    def _lift(self, other):
        if isinstance(other, OreElement):
            if other.ring is not self.ring:
                if other.ring.base is not self.ring.base:
                    raise AmbientMismatch(f"{self.ring!r} vs {other.ring!r}")
                raise DerivationMismatch("elements of Ore extensions with different derivations")
            return other
        if isinstance(other, (int, _RationalABC, RationalFunction, LaurentPoly)):
            return self.ring(other)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return OreElement(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return OreElement(self.ring, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return ore_mul(self, other)

    def __rmul__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return ore_mul(other, self)

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = self.ring.one
        for _ in range(k):
            result = ore_mul(result, self)
        return result

    def __eq__(self, other):
        if isinstance(other, OreElement):
            return self.ring is other.ring and self.coeffs == other.coeffs
        if isinstance(other, (int, _RationalABC, RationalFunction, LaurentPoly)):
            try:
                return self == self.ring(other)
            except AmbientMismatch:
                return False
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    @property
    def deg_x(self):
        """Degree in x; -1 for zero."""
        return len(self.coeffs) - 1

    @property
    def level(self):
        return max((c.level + i for i, c in enumerate(self.coeffs) if c), default=0)

    def is_laurent(self):
        return len(self.coeffs) <= 1

    def to_laurent(self):
        if not self.is_laurent():
            raise ValueError("element has positive degree in x")
        return self.coeffs[0] if self.coeffs else self.ring.base.zero

    def terms(self):
        """Iterate ((a, i), coefficient) over the monomials x^a x^i."""
        for i, c in enumerate(self.coeffs):
            for a, v in c.terms.items():
                yield (a, i), v

    def to_vector(self):
        return {ore_key(a, i): v for (a, i), v in self.terms()}

    def __str__(self):
        items = sorted(self.terms(), key=lambda t: ore_key(*t[0]), reverse=True)
        parts = []
        for (a, i), c in items:
            mono = _monomial_str(a)
            xs = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            parts.append(("*".join(p for p in (mono, xs) if p), c))
        return format_terms(parts)

    def __repr__(self):
        return f"OreElement({self})"


def from_vector(ring, vec):
    """Inverse of :meth:`OreElement.to_vector`."""
    by_deg = {}
    for (_, i, a), c in vec.items():
        by_deg.setdefault(i, {})[a] = c
    if not by_deg:
        return ring.zero
    top = max(by_deg)
    coeffs = [LaurentPoly(ring.base, by_deg.get(i, {})) for i in range(top + 1)]
    return OreElement(ring, coeffs)


def ore_mul(u, v):
    """Normal form of u * v."""
    if u.ring is not v.ring:
        if u.ring.base is not v.ring.base:
            raise AmbientMismatch(f"{u.ring!r} vs {v.ring!r}")
        raise DerivationMismatch("elements of Ore extensions with different derivations")
    ring = u.ring
    if not u or not v:
        return ring.zero
    d = ring.derivation
    zero = ring.base.zero
    out = [zero] * (len(u.coeffs) + len(v.coeffs) - 1)
    for k, b in enumerate(v.coeffs):
        if not b:
            continue
        derivs = [b]
        for i, a in enumerate(u.coeffs):
            if not a:
                continue
            while len(derivs) <= i and derivs[-1]:
                derivs.append(d(derivs[-1]))
            for j in range(min(i, len(derivs) - 1) + 1):
                dj = derivs[j]
                if not dj:
                    break
                term = a * dj
                c = comb(i, j)
                if c != 1:
                    term = term * c
                out[i - j + k] = out[i - j + k] + term
    return OreElement(ring, out)


@dataclass(frozen=True)
class WordBasisReport:
    m: int
    dim: int
    basis_rank_witness: tuple


def _word_count(n, m):
    g = 2 * n + 1
    return sum(g**L for L in range(m + 1))


def _word_levels(ring, m_max, cap):
    """Yield (L, normal forms of all words of length exactly L)."""
    n = ring.n
    if _word_count(n, m_max) > cap:
        raise ResourceLimit(
            f"{_word_count(n, m_max)} words of length <= {m_max} exceed the cap of {cap}"
        )
    gens = []
    for i in range(1, n + 1):
        gens.append(ring.gen(i))
        gens.append(ring.gen(i, -1))
    gens.append(ring.x)
    level = [ring.one]
    yield 0, level
    for L in range(1, m_max + 1):
        level = [ore_mul(w, g) for w in level for g in gens]
        yield L, level


def ore_dim_oracle_dims(spec, m_max, cap=DEFAULT_WORD_CAP):
    """dim R_m for every m <= m_max by brute-force word enumeration."""
    ring = spec if isinstance(spec, OreRing) else OreRing(spec)
    basis = EchelonBasis()
    dims = []
    for _, words in _word_levels(ring, m_max, cap):
        for w in words:
            basis.add(w.to_vector())
        dims.append(basis.rank)
    return dims


def ore_dim_oracle(spec, m, cap=DEFAULT_WORD_CAP):
    """Span of all words of length <= m in x_i^{+-1}, x, reduced to normal form."""
    if m < 0:
        raise ValueError("m must be >= 0")
    ring = spec if isinstance(spec, OreRing) else OreRing(spec)
    basis = EchelonBasis()
    witness = []
    for _, words in _word_levels(ring, m, cap):
        for w in words:
            if basis.add(w.to_vector()):
                witness.append(w)
    return WordBasisReport(m, basis.rank, tuple(witness))


def ore_dim_closed_form(n, m):
    """dim of (+)_{i=0}^m K_{m-i} x^i."""
    if n < 1 or m < 0:
        raise ValueError("need n >= 1 and m >= 0")
    return sum(filtration_dim_K(n, m - i) for i in range(m + 1))


def ore_basis(n, m):
    """Monomial basis (a, i), |a| + i <= m, of R_m in column-key order."""
    out = [(a, i) for i in range(m + 1) for a in l1_ball(n, m - i)]
    out.sort(key=lambda t: ore_key(*t))
    return out


__all__ = [
    "DerivationSpec",
    "OreElement",
    "OreRing",
    "WordBasisReport",
    "from_vector",
    "ore_basis",
    "ore_dim_closed_form",
    "ore_dim_oracle",
    "ore_dim_oracle_dims",
    "ore_key",
    "ore_mul",
]
