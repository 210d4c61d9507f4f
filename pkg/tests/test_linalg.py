from fractions import Fraction

import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

from conftest import small_fractions
from gkdim.linalg import EchelonBasis, rank

matrices = st.lists(
    st.lists(small_fractions, min_size=5, max_size=5), min_size=1, max_size=6
)


def _rows(matrix):
    return [{j: v for j, v in enumerate(row) if v} for row in matrix]


@given(matrices)
def test_rank_matches_sympy(matrix):
    expected = sp.Matrix([[sp.Rational(v.numerator, v.denominator) for v in row] for row in matrix]).rank()
    assert rank(_rows(matrix)) == expected


@given(matrices, st.lists(small_fractions, min_size=5, max_size=5))
def test_reduction_is_canonical(matrix, vec):
    basis = EchelonBasis()
    for r in _rows(matrix):
        basis.add(r)
    v = {j: c for j, c in enumerate(vec) if c}
    red = basis.reduce(v)
    assert not set(red) & set(basis.pivots())
    # adding a span element does not change the representative
    shifted = dict(v)
    for r in _rows(matrix):
        for j, c in r.items():
            shifted[j] = shifted.get(j, 0) + 2 * c
    assert basis.reduce({j: c for j, c in shifted.items() if c}) == red


def test_membership():
    basis = EchelonBasis()
    assert basis.add({0: Fraction(1), 1: Fraction(2)})
    assert not basis.add({0: Fraction(3), 1: Fraction(6)})
    assert {0: 2, 1: 4} in basis
    assert {0: 1} not in basis
    assert basis.rank == 1
