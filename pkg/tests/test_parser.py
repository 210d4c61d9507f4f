from fractions import Fraction

import pytest
from hypothesis import given

from conftest import Q2, laurent_polys, ore_elements, rational_functions
from gkdim import DerivationSpec, ExpressionSyntaxError, LaurentRing, NegativeOrePower, OreRing, parse_expression

K2 = LaurentRing(2, Q2)
R2 = OreRing(DerivationSpec.mcconnell(K2, [Q2.gen(1), Q2.gen(2)]))


def test_two_term_laurent():
    f = parse_expression("x1^-2 + (t1)*x2", K2)
    assert len(f.terms) == 2
    assert f == K2.gen(1, -2) + Q2.gen(1) * K2.gen(2)


def test_ore_normal_form():
    assert parse_expression("x*x1", R2) == R2.gen(1) * R2.x + Q2.gen(1) * R2.gen(1)


def test_negative_power_of_x():
    with pytest.raises(NegativeOrePower) as err:
        parse_expression("x^-1", R2)
    assert (err.value.line, err.value.column) == (1, 1)


def test_precedence():
    assert parse_expression("1 + 2*x1^2", K2) == 1 + 2 * K2.gen(1) ** 2
    assert parse_expression("-x1^2", K2) == -(K2.gen(1) ** 2)
    assert parse_expression("(x1 + 1)^2 - x1**2", K2) == 2 * K2.gen(1) + 1
    assert parse_expression("2/3*x1/x2", K2) == Fraction(2, 3) * K2.gen(1) * K2.gen(2) ** -1


def test_scalar_grammar():
    t1, t2 = Q2.gen(1), Q2.gen(2)
    assert parse_expression("(t1 + 2)/(3*t2)", Q2) == (t1 + 2) / (3 * t2)


@pytest.mark.parametrize(
    "text, ambient, line, column",
    [
        ("x1 + ", K2, 1, 6),
        ("x3", K2, 1, 1),
        ("x1 $ 2", K2, 1, 4),
        ("x", K2, 1, 1),
        ("x1 +\n  t5", K2, 2, 3),
        ("1/(x1 + 1)", K2, 1, 2),
        ("x1", Q2, 1, 1),
        ("(x1", K2, 1, 4),
        ("", K2, 1, 1),
    ],
)
def test_errors_carry_positions(text, ambient, line, column):
    with pytest.raises(ExpressionSyntaxError) as err:
        parse_expression(text, ambient)
    assert (err.value.line, err.value.column) == (line, column)
    assert str(err.value).startswith(f"line {line}, column {column}:")


rf_coeffs = rational_functions()


@given(laurent_polys(K2, coeffs=rf_coeffs))
def test_laurent_round_trip(f):
    assert parse_expression(str(f), K2) == f


@given(ore_elements(R2))
def test_ore_round_trip(u):
    assert parse_expression(str(u), R2) == u


@given(rational_functions())
def test_scalar_round_trip(a):
    assert parse_expression(str(a), Q2) == a
