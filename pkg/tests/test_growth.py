from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gkdim import (
    UNSTABLE,
    DegreeUnstable,
    DimensionSequence,
    HilbertPolynomial,
    InsufficientData,
    filtration_dim_K,
    finite_difference_degree,
    fit_hilbert_polynomial,
    gk_estimate,
)
from gkdim.growth import default_m_max, faulhaber_cumulative


def test_square_sequence_degree():
    assert finite_difference_degree([1, 4, 9, 16, 25], window=2) == 2


def test_constant_sequence():
    assert finite_difference_degree([1, 1, 1, 1], window=3) == 0


def test_exponential_is_unstable():
    assert finite_difference_degree([1, 2, 4, 8, 16], window=2) is UNSTABLE
    assert repr(UNSTABLE) == "Unstable"


def test_fit_k1_levels():
    p = fit_hilbert_polynomial([2 * m + 1 for m in range(8)])
    assert p == HilbertPolynomial([1, 2])
    assert str(p) == "2*m + 1"


def test_fit_k2_levels():
    p = fit_hilbert_polynomial([filtration_dim_K(2, m) for m in range(8)])
    assert p.coeffs == (1, 2, 2)


def test_fit_zero():
    p = fit_hilbert_polynomial([0] * 8)
    assert p.degree == -1
    assert str(p) == "0"


def test_fit_refuses_unstable():
    with pytest.raises(DegreeUnstable):
        fit_hilbert_polynomial([2**m for m in range(8)])


def test_cumulative_examples():
    assert faulhaber_cumulative([2 * m + 1 for m in range(6)]).dims == (1, 4, 9, 16, 25, 36)
    assert faulhaber_cumulative([1] * 5).dims == (1, 2, 3, 4, 5)
    assert faulhaber_cumulative([0] * 5).dims == (0,) * 5


def test_estimates():
    assert gk_estimate([filtration_dim_K(2, m) for m in range(8)]).degree == 2
    assert gk_estimate([(m + 1) ** 2 for m in range(8)]).degree == 2
    assert gk_estimate([1] * 8).degree == 0
    zero = gk_estimate([0] * 8)
    assert zero.is_zero and zero.dimension == -1


def test_transient_prefix_is_reported():
    rep = gk_estimate([1, 5, 6, 6, 6, 6, 6, 6])
    assert rep.degree == 0
    assert rep.stable_from == 2
    assert rep.residual == 0


def test_exponential_report():
    rep = gk_estimate([2**m for m in range(10)])
    assert not rep.stable
    assert rep.as_dict()["degree"] == "Unstable"


def test_short_input():
    with pytest.raises(InsufficientData):
        gk_estimate([1, 2, 3])
    with pytest.raises(ValueError):
        finite_difference_degree([1, 2, 3, 4], window=1)


def test_sequences_are_nonnegative():
    with pytest.raises(ValueError):
        DimensionSequence((1, -1))


def test_default_levels():
    assert default_m_max(1) == 8
    assert default_m_max(3) == 10


integer_polys = st.lists(st.integers(0, 6), min_size=1, max_size=4).filter(lambda c: c[-1] > 0)


def _values(coeffs, length=12):
    return [sum(c * m**k for k, c in enumerate(coeffs)) for m in range(length)]


@given(integer_polys)
def test_fit_recovers_polynomial(coeffs):
    vals = _values(coeffs)
    p = fit_hilbert_polynomial(vals)
    assert p.coeffs == tuple(Fraction(c) for c in coeffs)
    assert all(p(m) == v for m, v in enumerate(vals))


@given(integer_polys)
def test_cumulative_raises_degree(coeffs):
    vals = _values(coeffs)
    d = finite_difference_degree(vals)
    assert finite_difference_degree(faulhaber_cumulative(vals)) == d + 1
