"""Laurent polynomial algebras K_n = k[x1^{+-1}, ..., xn^{+-1}].

Elements are sparse maps from exponent vectors in Z^n to nonzero scalars.
The standard filtration uses the generating set {x_i, x_i^{-1}}: level m is
spanned by the monomials whose exponent vector has l1-norm at most m.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from numbers import Rational as _RationalABC

from .errors import AmbientMismatch, IndexOutOfRange, InvalidDerivation
from .scalars import QQ, RationalFunction

# exponents are conceptually fixed-width machine integers
EXPONENT_LIMIT = 2**31 - 1


def _check_exponents(exp):
    for e in exp:
        if e > EXPONENT_LIMIT or e < -EXPONENT_LIMIT:
            raise OverflowError(f"exponent {e} exceeds the supported range")
    return exp


def l1_norm(exp):
    return sum(abs(e) for e in exp)


def graded_key(exp):
    """Graded-lex key: l1-degree first, then the exponent vector itself."""
    return (l1_norm(exp), exp)


def _is_scalar(value):
    return isinstance(value, (int, _RationalABC, RationalFunction))


class LaurentRing:
    """The algebra k[x1^{+-1}, ..., xn^{+-1}] over a field descriptor."""

    _cache: dict = {}

    def __new__(cls, n, field=QQ):
        if n < 1:
            raise ValueError("need at least one variable")
        key = (n, field)
        inst = cls._cache.get(key)
        if inst is None:
            inst = super().__new__(cls)
            inst.n = n
            inst.field = field
            cls._cache[key] = inst
        return inst

    def __reduce__(self):
        return (LaurentRing, (self.n, self.field))

    def __repr__(self):
        return f"LaurentRing(n={self.n}, field={self.field!r})"

    @property
    def zero(self):
        return LaurentPoly(self, {})

    @property
    def one(self):
        return self.monomial((0,) * self.n)

    def monomial(self, exp, coeff=1):
        exp = tuple(exp)
        if len(exp) != self.n:
            raise AmbientMismatch(f"exponent vector {exp} has wrong length for n={self.n}")
        c = self.field(coeff)
        return LaurentPoly(self, {_check_exponents(exp): c} if c else {})

    def gen(self, i, power=1):
        """x_i^power with 1-based index i."""
        if not 1 <= i <= self.n:
            raise IndexOutOfRange(f"x{i} does not exist for n={self.n}")
        exp = [0] * self.n
        exp[i - 1] = power
        return self.monomial(exp)

    def gens(self):
        return [self.gen(i) for i in range(1, self.n + 1)]

    def __call__(self, value):
        if isinstance(value, LaurentPoly):
            if value.ring is not self:
                raise AmbientMismatch(f"{value.ring!r} element used in {self!r}")
            return value
        if isinstance(value, dict):
            return LaurentPoly(self, {tuple(e): self.field(c) for e, c in value.items()}).pruned()
        if isinstance(value, str):
            from .parser import parse_expression

            return parse_expression(value, self)
        return self.monomial((0,) * self.n, value)


class LaurentPoly:
    """Element of a :class:`LaurentRing`; treat as immutable."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms

    def pruned(self):
        return LaurentPoly(self.ring, {e: c for e, c in self.terms.items() if c})

    # -- arithmetic -------------------------------------------------------
    def _lift(self, other):
        if isinstance(other, LaurentPoly):
            if other.ring is not self.ring:
                raise AmbientMismatch(f"{self.ring!r} vs {other.ring!r}")
            return other
        if _is_scalar(other):
            return self.ring(other)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, 0) + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        return LaurentPoly(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.ring, {e: -c for e, c in self.terms.items()})

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
        if _is_scalar(other):
            c = self.ring.field(other)
            if not c:
                return self.ring.zero
            return LaurentPoly(self.ring, {e: v * c for e, v in self.terms.items()})
        other = self._lift(other)
        if other is None:
            return NotImplemented
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(e, 0) + c1 * c2
                if s:
                    terms[e] = s
                else:
                    terms.pop(e, None)
        for e in terms:
            _check_exponents(e)
        return LaurentPoly(self.ring, terms)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __truediv__(self, other):
        if _is_scalar(other):
            return self * (1 / self.ring.field(other))
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def is_monomial(self):
        return len(self.terms) == 1

    def is_unit(self):
        return self.is_monomial()

    def inverse(self):
        if not self.is_monomial():
            raise ZeroDivisionError("only monomials are units in a Laurent polynomial ring")
        (e, c), = self.terms.items()
        return LaurentPoly(self.ring, {tuple(-a for a in e): 1 / c})

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = self.ring.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.ring is other.ring and self.terms == other.terms
        if _is_scalar(other):
            return self == self.ring(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ring.n, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # -- structure --------------------------------------------------------
    @property
    def level(self):
        """Least filtration level containing self (0 for the zero element)."""
        return max((l1_norm(e) for e in self.terms), default=0)

    def is_constant(self):
        return not self.terms or set(self.terms) == {(0,) * self.ring.n}

    def constant_coefficient(self):
        return self.terms.get((0,) * self.ring.n, self.ring.field.zero)

    def variables(self):
        """1-based indices of the variables that occur."""
        return sorted({i + 1 for e in self.terms for i, a in enumerate(e) if a})

    def sorted_terms(self, reverse=True):
        return sorted(self.terms.items(), key=lambda t: graded_key(t[0]), reverse=reverse)

    def derivative(self, i):
        return partial_derivative(self, i)

    def __str__(self):
        return format_terms(
            [(_monomial_str(e), c) for e, c in self.sorted_terms()]
        )

    def __repr__(self):
        return f"LaurentPoly({self})"


def _monomial_str(exp):
    return "*".join(
        f"x{i + 1}" if a == 1 else f"x{i + 1}^{a}" for i, a in enumerate(exp) if a
    )


def _scalar_str(c):
    """(body, negative) for a coefficient, parenthesized when compound."""
    if isinstance(c, RationalFunction):
        v = c.constant_value()
        if v is None:
            if c.is_polynomial() and len(c.num.terms()) == 1:
                neg = c.num.LC < 0
                return str(-c if neg else c), neg
            if c.is_polynomial():
                return f"({c})", False
            return str(c), False
        c = v
    return str(abs(c)), c < 0


def format_terms(terms):
    """Join (monomial string, coefficient) pairs; '' stands for the unit monomial."""
    if not terms:
        return "0"
    parts = []
    for mono, c in terms:
        body, neg = _scalar_str(c)
        if mono:
            if body == "1":
                body = mono
            else:
                body = f"{body}*{mono}"
        if not parts:
            parts.append("-" + body if neg else body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts)


def laurent_arith(f, g, op):
    """``op`` in {"add", "sub", "mul"}."""
    if f.ring is not g.ring:
        raise AmbientMismatch(f"{f.ring!r} vs {g.ring!r}")
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    raise ValueError(f"unknown operation {op!r}")


def partial_derivative(f, i):
    """Formal d/dx_i on Laurent monomials: x^a -> a_i x^(a - e_i)."""
    n = f.ring.n
    if not 1 <= i <= n:
        raise IndexOutOfRange(f"no variable x{i} for n={n}")
    j = i - 1
    terms = {}
    for e, c in f.terms.items():
        if e[j]:
            ne = e[:j] + (e[j] - 1,) + e[j + 1:]
            terms[_check_exponents(ne)] = c * e[j]
    return LaurentPoly(f.ring, terms)


@dataclass(frozen=True)
class DerivationSpec:
    """delta = sum_i (alpha_i x_i + beta_i) d/dx_i on a Laurent ring."""

    ring: LaurentRing
    alpha: tuple
    beta: tuple

    def __post_init__(self):
        n = self.ring.n
        if len(self.alpha) != n or len(self.beta) != n:
            raise AmbientMismatch(f"derivation needs {n} alpha and beta values")
        k = self.ring.field
        object.__setattr__(self, "alpha", tuple(k(a) for a in self.alpha))
        object.__setattr__(self, "beta", tuple(k(b) for b in self.beta))

    @classmethod
    def mcconnell(cls, ring, lambdas):
        """delta(x_j) = lambda_j x_j."""
        return cls(ring, tuple(lambdas), (0,) * ring.n)

    @classmethod
    def from_g(cls, ring, gs):
        """Build from g_1..g_n; each g_i must lie in k*x_i + k."""
        if len(gs) != ring.n:
            raise AmbientMismatch(f"need {ring.n} coefficients g_i")
        alpha, beta = [], []
        for i, g in enumerate(gs, start=1):
            g = ring(g)
            xi = ring.gen(i).terms
            (ei,) = xi
            zero = (0,) * ring.n
            extra = set(g.terms) - {ei, zero}
            if extra:
                raise InvalidDerivation(f"g_{i} = {g} is not of the form a*x{i} + b")
            alpha.append(g.terms.get(ei, 0))
            beta.append(g.terms.get(zero, 0))
        return cls(ring, tuple(alpha), tuple(beta))

    @property
    def n(self):
        return self.ring.n

    def g(self, i):
        return self.ring.gen(i) * self.alpha[i - 1] + self.beta[i - 1]

    @property
    def is_mcconnell(self):
        return all(not b for b in self.beta)

    def __call__(self, f):
        return apply_derivation(self, f)


def apply_derivation(d, f):
    """sum_i (alpha_i x_i + beta_i) * df/dx_i, computed termwise."""
    if f.ring is not d.ring:
        raise AmbientMismatch(f"derivation on {d.ring!r} applied to {f.ring!r} element")
    terms = {}

    def bump(e, c):
        s = terms.get(e, 0) + c
        if s:
            terms[e] = s
        else:
            terms.pop(e, None)

    for e, c in f.terms.items():
        for j, a in enumerate(e):
            if not a:
                continue
            if d.alpha[j]:
                bump(e, c * a * d.alpha[j])
            if d.beta[j]:
                ne = e[:j] + (a - 1,) + e[j + 1:]
                bump(_check_exponents(ne), c * a * d.beta[j])
    return LaurentPoly(f.ring, terms)


@lru_cache(maxsize=None)
def _ball(n, m):
    pts = []
    for exp in itertools.product(range(-m, m + 1), repeat=n):
        if l1_norm(exp) <= m:
            pts.append(exp)
    pts.sort(key=graded_key)
    return tuple(pts)


def l1_ball(n, m):
    """Exponent vectors with l1-norm <= m, in graded-lex order."""
    if m < 0:
        return ()
    return _ball(n, m)


def l1_sphere(n, m):
    return tuple(e for e in l1_ball(n, m) if l1_norm(e) == m)


@dataclass(frozen=True)
class FiltrationLevel:
    m: int
    basis: tuple

    @property
    def dim(self):
        return len(self.basis)


def filtration_level(n, m):
    return FiltrationLevel(m, l1_ball(n, m))


def filtration_dim_K(n, m):
    """Number of lattice points of Z^n with l1-norm <= m.

    A point with exactly j nonzero coordinates is fixed by a support,
    a sign pattern and a composition of a budget <= m, so the count is
    sum_j 2^j C(n, j) C(m, j).
    """
    if n < 1 or m < 0:
        raise ValueError("need n >= 1 and m >= 0")
    return sum(2**j * comb(n, j) * comb(m, j) for j in range(min(n, m) + 1))
