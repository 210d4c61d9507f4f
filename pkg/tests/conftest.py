from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from gkdim import DerivationSpec, Field, LaurentRing, OreRing

settings.register_profile(
    "default", deadline=None, suppress_health_check=[HealthCheck.too_slow], print_blob=True
)
settings.load_profile("default")

Q1 = Field(1)
Q2 = Field(2)

small_fractions = st.builds(
    Fraction, st.integers(-5, 5), st.integers(1, 4)
)


@st.composite
def q_polys(draw, field=Q2, max_terms=3, max_deg=2):
    """Small polynomials in t1..tr with rational coefficients."""
    t = [field.gen(i) for i in range(1, field.r + 1)]
    value = field(draw(small_fractions))
    for _ in range(draw(st.integers(0, max_terms))):
        term = field(draw(small_fractions))
        for g in t:
            term = term * g ** draw(st.integers(0, max_deg))
        value = value + term
    return value


@st.composite
def rational_functions(draw, field=Q2):
    num = draw(q_polys(field))
    den = draw(q_polys(field).filter(bool))
    return num / den


@st.composite
def laurent_polys(draw, ring, max_terms=4, radius=2, coeffs=small_fractions):
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        e = tuple(draw(st.integers(-radius, radius)) for _ in range(ring.n))
        terms[e] = terms.get(e, 0) + draw(coeffs)
    return ring({e: c for e, c in terms.items() if c})


@st.composite
def ore_elements(draw, R, max_deg=2, max_terms=2):
    coeffs = [draw(laurent_polys(R.base, max_terms=max_terms, radius=1)) for _ in range(draw(st.integers(0, max_deg)) + 1)]
    return R.from_coeffs(coeffs)


@pytest.fixture
def mcconnell2():
    K = LaurentRing(2, Q2)
    return DerivationSpec.mcconnell(K, [Q2.gen(1), Q2.gen(2)])


@pytest.fixture
def ore1():
    K = LaurentRing(1)
    return OreRing(DerivationSpec.mcconnell(K, [Fraction(1, 2)]))


# -- acceptance reporting ----------------------------------------------------

_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, text): acceptance criterion")


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call":
        return
    number, text = marker.args
    ok = call.excinfo is None
    prev = _criteria.get(number, (text, True))
    _criteria[number] = (text, prev[1] and ok)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        text, ok = _criteria[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {text}")
