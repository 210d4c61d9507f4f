"""Hilbert-polynomial fitting and growth-degree estimation.

A dimension sequence that is eventually polynomial of degree d has a
constant d-th forward difference on its tail.  The estimator looks for the
least such d over a fixed tail window and then interpolates exactly over
the rationals; sequences that never settle are reported as ``UNSTABLE``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import accumulate

from .errors import DegreeUnstable, InsufficientData

DEFAULT_WINDOW = 3
MIN_LENGTH = 6


class _Unstable:
    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "Unstable"

    __str__ = __repr__

    def __reduce__(self):
        return (_Unstable, ())


UNSTABLE = _Unstable()


@dataclass(frozen=True)
class DimensionSequence:
    dims: tuple
    source: str = ""

    def __post_init__(self):
        dims = tuple(int(d) for d in self.dims)
        if any(d < 0 for d in dims):
            raise ValueError("dimensions must be nonnegative")
        object.__setattr__(self, "dims", dims)

    def __len__(self):
        return len(self.dims)

    def __iter__(self):
        return iter(self.dims)

    def __getitem__(self, i):
        return self.dims[i]

    @property
    def is_monotone(self):
        return all(a <= b for a, b in zip(self.dims, self.dims[1:]))


def _as_list(seq):
    return list(seq.dims) if isinstance(seq, DimensionSequence) else [int(d) for d in seq]


class HilbertPolynomial:
    """Polynomial in m with Fraction coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = [Fraction(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @property
    def degree(self):
        """-1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __call__(self, m):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * m + c
        return acc

    def __eq__(self, other):
        if isinstance(other, HilbertPolynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else ("m" if k == 1 else f"m^{k}")
            mag = abs(c)
            body = str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}")
            if not parts:
                parts.append("-" + body if c < 0 else body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"HilbertPolynomial({self})"


def _differences(values):
    return [b - a for a, b in zip(values, values[1:])]


def finite_difference_degree(seq, window=DEFAULT_WINDOW):
    """Least d whose d-th difference is constant on the last ``window`` entries.

    Returns ``UNSTABLE`` when no difference order settles before the data runs
    out.
    """
    if window < 2:
        raise ValueError("window must be at least 2")
    values = _as_list(seq)
    if len(values) < window:
        raise InsufficientData(f"need at least {window} values, got {len(values)}")
    d = 0
    while len(values) >= window:
        tail = values[-window:]
        if all(v == tail[0] for v in tail):
            return d
        values = _differences(values)
        d += 1
    return UNSTABLE


def _interpolate(points):
    """Coefficients of the unique polynomial through the (m, y) points (Lagrange)."""
    total = [Fraction(0)] * len(points)
    for j, (mj, yj) in enumerate(points):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for k, (mk, _) in enumerate(points):
            if k == j:
                continue
            # multiply basis by (m - mk)
            basis = [Fraction(0)] + basis
            for t in range(len(basis) - 1):
                basis[t] -= mk * basis[t + 1]
            denom *= mj - mk
        scale = Fraction(yj) / denom
        for t, c in enumerate(basis):
            total[t] += c * scale
    return total


def fit_hilbert_polynomial(seq, window=DEFAULT_WINDOW):
    """Exact interpolating polynomial of the stabilized tail."""
    values = _as_list(seq)
    d = finite_difference_degree(values, window)
    if d is UNSTABLE:
        raise DegreeUnstable("sequence has no stabilized polynomial tail")
    tail_len = window + d
    if len(values) < tail_len:
        raise InsufficientData(f"need {tail_len} values for degree {d}")
    start = len(values) - tail_len
    pts = [(m, values[m]) for m in range(len(values) - d - 1, len(values))]
    poly = HilbertPolynomial(_interpolate(pts))
    for m in range(start, len(values)):
        if poly(m) != values[m]:
            raise DegreeUnstable(f"interpolant misses the tail at m={m}")
    return poly


def faulhaber_cumulative(seq):
    """Partial sums m -> sum_{t <= m} dims[t]."""
    values = _as_list(seq)
    src = seq.source if isinstance(seq, DimensionSequence) else ""
    return DimensionSequence(tuple(accumulate(values)), f"cumulative({src})" if src else "cumulative")


@dataclass(frozen=True)
class GrowthReport:
    """Outcome of :func:`gk_estimate`.

    ``degree`` is an int or ``UNSTABLE``.  ``stable_from`` is the first level
    from which the Hilbert polynomial reproduces every remaining entry.
    """

    degree: object
    hilbert: HilbertPolynomial | None
    window: int
    residual: Fraction | None
    stable_from: int | None = None
    dims: tuple = field(default=(), repr=False)

    @property
    def stable(self):
        return self.degree is not UNSTABLE

    @property
    def is_zero(self):
        """The tail is identically zero (the module vanishes at high level)."""
        return self.stable and self.hilbert is not None and self.hilbert.degree < 0

    @property
    def dimension(self):
        """Growth degree with the convention -1 for the zero module."""
        if not self.stable:
            return UNSTABLE
        return -1 if self.is_zero else self.degree

    def as_dict(self):
        return {
            "degree": self.degree if self.stable else "Unstable",
            "hilbert_polynomial": None if self.hilbert is None else str(self.hilbert),
            "hilbert_coefficients": None
            if self.hilbert is None
            else [str(c) for c in self.hilbert.coeffs],
            "window": self.window,
            "residual": None if self.residual is None else str(self.residual),
            "stable_from": self.stable_from,
            "dims": list(self.dims),
        }


def gk_estimate(seq, window=DEFAULT_WINDOW):
    """Growth degree and Hilbert polynomial of a dimension sequence."""
    values = _as_list(seq)
    if len(values) < MIN_LENGTH:
        raise InsufficientData(f"gk_estimate needs at least {MIN_LENGTH} levels, got {len(values)}")
    d = finite_difference_degree(values, window)
    if d is UNSTABLE:
        return GrowthReport(UNSTABLE, None, window, None, None, tuple(values))
    poly = fit_hilbert_polynomial(values, window)
    tail = range(len(values) - window - d, len(values))
    residual = max(abs(poly(m) - values[m]) for m in tail)
    start = len(values)
    while start > 0 and poly(start - 1) == values[start - 1]:
        start -= 1
    return GrowthReport(d, poly, window, residual, start, tuple(values))


def default_m_max(expected_degree):
    return max(2 * expected_degree + 4, 8)
