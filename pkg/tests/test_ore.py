from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings

from conftest import Q2, ore_elements
from gkdim import (
    DerivationMismatch,
    DerivationSpec,
    LaurentRing,
    OreRing,
    ResourceLimit,
    gk_estimate,
    ore_dim_closed_form,
    ore_dim_oracle,
    ore_mul,
)
from gkdim.ore import ore_dim_oracle_dims
from oracles import apply_operator

K1 = LaurentRing(1)
lam = Fraction(1, 2)
R1 = OreRing(DerivationSpec.mcconnell(K1, [lam]))
K2 = LaurentRing(2)
R2 = OreRing(DerivationSpec(K2, (Fraction(1, 3), 2), (1, 0)))


def test_commutation_with_a_generator():
    x, x1 = R1.x, R1(K1.gen(1))
    assert ore_mul(x, x1) == x1 * x + lam * x1


def test_constants_commute():
    assert R1.x * R1(5) == R1(5) * R1.x


def test_second_power():
    x, x1 = R1.x, R1(K1.gen(1))
    assert x**2 * x1 == x1 * x**2 + 2 * lam * x1 * x + lam**2 * x1


def test_symbolic_lambda():
    Kt = LaurentRing(1, Q2)
    R = OreRing(DerivationSpec.mcconnell(Kt, [Q2.gen(1)]))
    assert str(R("x*x1")) == "x1*x + t1*x1"


def test_different_derivations_do_not_mix():
    other = OreRing(DerivationSpec.mcconnell(K1, [3]))
    with pytest.raises(DerivationMismatch):
        R1.x * other.x


@pytest.mark.parametrize("m, expected", [(0, 1), (1, 4), (2, 9), (3, 16)])
def test_word_oracle_n1(m, expected):
    rep = ore_dim_oracle(R1.derivation, m)
    assert rep.dim == expected
    assert len(rep.basis_rank_witness) == expected


@pytest.mark.parametrize("n, m, expected", [(1, 2, 9), (2, 1, 6), (1, 0, 1), (2, 2, 1 + 5 + 13)])
def test_closed_form(n, m, expected):
    assert ore_dim_closed_form(n, m) == expected


@pytest.mark.parametrize("spec", [R1.derivation, R2.derivation])
def test_oracle_agrees_with_closed_form(spec):
    m_max = 5 if spec.n == 1 else 3
    oracle = ore_dim_oracle_dims(spec, m_max)
    assert oracle == [ore_dim_closed_form(spec.n, m) for m in range(m_max + 1)]


def test_word_cap():
    with pytest.raises(ResourceLimit):
        ore_dim_oracle(R2.derivation, 6, cap=1000)


@pytest.mark.parametrize("n", [1, 2])
def test_closed_form_degree(n):
    assert gk_estimate([ore_dim_closed_form(n, m) for m in range(10)]).degree == n + 1


def _as_sympy(u, xs):
    out = []
    for i, c in enumerate(u.coeffs):
        expr = sp.sympify(str(c).replace("^", "**"), locals={str(x): x for x in xs}) if c else sp.Integer(0)
        out.append((i, expr))
    return out


@settings(max_examples=60)
@given(ore_elements(R2), ore_elements(R2))
def test_product_acts_as_composition(u, v):
    # R acts on K_n by x -> D, a -> multiplication; the product must act as u o v
    xs = sp.symbols("x1 x2")
    probe = xs[0] ** 2 * xs[1] - 3 / xs[1] + xs[0] * xs[1] ** -2
    alphas = [sp.Rational(1, 3), 2]
    betas = [1, 0]
    lhs = apply_operator(_as_sympy(u * v, xs), probe, xs, alphas, betas)
    inner = apply_operator(_as_sympy(v, xs), probe, xs, alphas, betas)
    rhs = apply_operator(_as_sympy(u, xs), inner, xs, alphas, betas)
    assert sp.simplify(lhs - rhs) == 0


@given(ore_elements(R2), ore_elements(R2), ore_elements(R2))
def test_associativity(u, v, w):
    assert (u * v) * w == u * (v * w)


@given(ore_elements(R2).filter(bool), ore_elements(R2).filter(bool))
def test_degree_additivity(u, v):
    assert (u * v).deg_x == u.deg_x + v.deg_x


@given(ore_elements(R2), ore_elements(R2), ore_elements(R2))
def test_distributivity(u, v, w):
    assert u * (v + w) == u * v + u * w
    assert (u + v) * w == u * w + v * w
