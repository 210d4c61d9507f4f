"""Exact arithmetic in the base field k.

``k`` is either the rationals (``Field(0)``) or the rational function field
``Q(t1, ..., tr)`` (``Field(r)``).  Rationals are plain ``fractions.Fraction``
values; rational functions are :class:`RationalFunction` instances backed by
sympy's sparse polynomial rings and kept reduced after every operation.
"""

from __future__ import annotations

import functools
import operator
from fractions import Fraction
from numbers import Rational as _RationalABC

from sympy.polys.domains import QQ as _QQ
from sympy.polys.orderings import grlex
from sympy.polys.rings import ring as _sympy_ring

from .errors import FieldMismatch


@functools.lru_cache(maxsize=None)
def _poly_ring(r):
    names = ",".join(f"t{i}" for i in range(1, r + 1))
    return _sympy_ring(names, _QQ, grlex)[0]


def _to_fraction(c):
    return Fraction(int(c.numerator), int(c.denominator))


def format_poly(p):
    """Print a sympy PolyElement in the input grammar (``^`` powers, ``*`` products)."""
    if not p:
        return "0"
    names = [f"t{i}" for i in range(1, p.ring.ngens + 1)]
    parts = []
    for expv, c in p.terms():
        c = _to_fraction(c)
        mono = "*".join(
            names[i] if e == 1 else f"{names[i]}^{e}" for i, e in enumerate(expv) if e
        )
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)


class RationalFunction:
    """Element of Q(t1..tr) as a reduced fraction num/den.

    The denominator is monic with respect to graded-lex order on the t
    variables, so equal values have identical representations.
    """

    __slots__ = ("field", "num", "den")

    def __init__(self, field, num, den=None, _reduced=False):
        self.field = field
        R = field.poly_ring
        num = R(num)
        den = R.one if den is None else R(den)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not _reduced:
            if not num:
                den = R.one
            else:
                _, num, den = num.cofactors(den)
            lc = den.LC
            if lc != 1:
                num = num.quo_ground(lc)
                den = den.quo_ground(lc)
        self.num = num
        self.den = den

    # -- coercion ---------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            if other.field != self.field:
                raise FieldMismatch(f"cannot combine elements of {self.field} and {other.field}")
            return other
        if isinstance(other, (int, _RationalABC)):
            return self.field(other)
        return NotImplemented

    def _binary(self, other, op, reflected=False):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = (other, self) if reflected else (self, other)
        return op(a, b)

    @staticmethod
    def _add(a, b):
        if a.den == b.den:
            return RationalFunction(a.field, a.num + b.num, a.den)
        return RationalFunction(a.field, a.num * b.den + b.num * a.den, a.den * b.den)

    @staticmethod
    def _sub(a, b):
        if a.den == b.den:
            return RationalFunction(a.field, a.num - b.num, a.den)
        return RationalFunction(a.field, a.num * b.den - b.num * a.den, a.den * b.den)

    @staticmethod
    def _mul(a, b):
        return RationalFunction(a.field, a.num * b.num, a.den * b.den)

    @staticmethod
    def _div(a, b):
        if not b.num:
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(a.field, a.num * b.den, a.den * b.num)

    def __add__(self, other):
        return self._binary(other, self._add)

    def __radd__(self, other):
        return self._binary(other, self._add, reflected=True)

    def __sub__(self, other):
        return self._binary(other, self._sub)

    def __rsub__(self, other):
        return self._binary(other, self._sub, reflected=True)

    def __mul__(self, other):
        return self._binary(other, self._mul)

    def __rmul__(self, other):
        return self._binary(other, self._mul, reflected=True)

    def __truediv__(self, other):
        return self._binary(other, self._div)

    def __rtruediv__(self, other):
        return self._binary(other, self._div, reflected=True)

    def __neg__(self):
        return RationalFunction(self.field, -self.num, self.den, _reduced=True)

    def __pos__(self):
        return self

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return (1 / self) ** (-k)
        return RationalFunction(self.field, self.num**k, self.den**k, _reduced=True)

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, RationalFunction):
            return self.field is other.field and self.num == other.num and self.den == other.den
        if isinstance(other, (int, _RationalABC)):
            c = self.constant_value()
            return c is not None and c == other
        return NotImplemented

    def __hash__(self):
        c = self.constant_value()
        if c is not None:
            return hash(c)
        return hash((self.field.r, tuple(self.num.terms()), tuple(self.den.terms())))

    def constant_value(self):
        """The value as a Fraction if this is a constant, else None."""
        if self.num.is_ground and self.den == 1:
            return _to_fraction(self.num.LC) if self.num else Fraction(0)
        return None

    def is_polynomial(self):
        return self.den == 1

    def __str__(self):
        if self.den == 1:
            return format_poly(self.num)
        return f"({format_poly(self.num)})/({format_poly(self.den)})"

    def __repr__(self):
        return f"RationalFunction({self})"


class Field:
    """Field descriptor: ``Field(0)`` is Q, ``Field(r)`` is Q(t1..tr)."""

    _cache: dict = {}

    def __new__(cls, r=0):
        if r < 0:
            raise ValueError("number of transcendentals must be >= 0")
        inst = cls._cache.get(r)
        if inst is None:
            inst = super().__new__(cls)
            inst.r = r
            cls._cache[r] = inst
        return inst

    @property
    def poly_ring(self):
        return _poly_ring(self.r)

    @property
    def is_rational(self):
        return self.r == 0

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def __call__(self, value):
        """Coerce an int, Fraction or element of this field into canonical form."""
        if isinstance(value, RationalFunction):
            if value.field is not self:
                raise FieldMismatch(f"{value.field} element used in {self}")
            return value
        if isinstance(value, bool):
            value = int(value)
        if isinstance(value, (int, _RationalABC)):
            q = Fraction(value)
            if self.r == 0:
                return q
            return RationalFunction(self, self.poly_ring(_QQ(q.numerator, q.denominator)), _reduced=True)
        if isinstance(value, str):
            from .parser import parse_scalar

            return parse_scalar(value, self)
        raise TypeError(f"cannot coerce {value!r} into {self}")

    def gen(self, i):
        """The transcendental t_i (1-based)."""
        if not 1 <= i <= self.r:
            raise IndexError(f"t{i} does not exist in {self}")
        return RationalFunction(self, self.poly_ring.gens[i - 1], _reduced=True)

    def contains(self, value):
        if isinstance(value, RationalFunction):
            return value.field is self
        return isinstance(value, (int, _RationalABC))

    def __repr__(self):
        if self.r == 0:
            return "Field(QQ)"
        return f"Field(QQ({', '.join(f't{i}' for i in range(1, self.r + 1))}))"

    def __reduce__(self):
        return (Field, (self.r,))


QQ = Field(0)


def field_of(*values):
    """The common field of the given scalars; plain rationals embed everywhere."""
    found = None
    for v in values:
        if isinstance(v, RationalFunction):
            if found is not None and found is not v.field:
                raise FieldMismatch(f"{found} vs {v.field}")
            found = v.field
        elif not isinstance(v, (int, _RationalABC)):
            raise TypeError(f"not a scalar: {v!r}")
    return found if found is not None else QQ


_OPS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


def scalar_arith(a, b, op):
    """Apply ``op`` in {"add", "sub", "mul", "div"} and return the canonical result."""
    k = field_of(a, b)
    return k(_OPS[op](k(a), k(b)))


def _numerator_rows(values, k):
    # Clear denominators: each value becomes a coefficient vector over Q of
    # v * D in the monomial basis of Q[t].
    values = [k(v) for v in values]
    if k.r == 0:
        return [{(): v} if v else {} for v in values]
    den = values[0].den
    for v in values[1:]:
        den = den.lcm(v.den)
    rows = []
    for v in values:
        p = v.num * den.exquo(v.den)
        rows.append({m: _to_fraction(c) for m, c in p.terms()})
    return rows


def q_linear_relation(values):
    """A nontrivial rational vector c with sum c_i v_i = 0, or None if independent."""
    if not values:
        raise ValueError("q_linear_relation needs a nonempty list")
    k = field_of(*values)
    rows = _numerator_rows(values, k)
    # Echelon rows keyed by pivot, each tracking its combination of inputs.
    basis = {}
    for idx, row in enumerate(rows):
        vec = dict(row)
        combo = {idx: Fraction(1)}
        while vec:
            p = max(vec)
            if p not in basis:
                break
            brow, bcombo = basis[p]
            f = vec[p]
            for col, val in brow.items():
                nv = vec.get(col, 0) - f * val
                if nv:
                    vec[col] = nv
                else:
                    vec.pop(col, None)
            for j, val in bcombo.items():
                nv = combo.get(j, 0) - f * val
                if nv:
                    combo[j] = nv
                else:
                    combo.pop(j, None)
        if not vec:
            return [combo.get(j, Fraction(0)) for j in range(len(values))]
        p = max(vec)
        inv = 1 / vec[p]
        basis[p] = ({c: v * inv for c, v in vec.items()}, {j: v * inv for j, v in combo.items()})
    return None


def q_linear_independent(values):
    """True iff the scalars admit no nontrivial Q-linear relation."""
    return q_linear_relation(values) is None
