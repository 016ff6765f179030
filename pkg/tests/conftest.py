import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from seqdiv.coeff import PrimeField, Rationals
from seqdiv.polyring import Poly

settings.register_profile(
    "suite",
    deadline=None,
    max_examples=60,
    suppress_health_check=[
        HealthCheck.too_slow,
        HealthCheck.function_scoped_fixture,
    ],
)
settings.load_profile("suite")

FIELDS = [Rationals(), PrimeField(2), PrimeField(3), PrimeField(5), PrimeField(7)]


@pytest.fixture(params=FIELDS, ids=lambda f: str(f))
def field(request):
    return request.param


@pytest.fixture
def f5():
    return PrimeField(5)


@pytest.fixture
def rationals():
    return Rationals()


def poly_strategy(field, max_degree=4, nonzero=False):
    """Random polynomials with small coefficients over the given field."""
    if field.char:
        coeff = st.integers(min_value=0, max_value=field.p - 1)
    else:
        coeff = st.fractions(
            min_value=-4, max_value=4, max_denominator=3
        )
    def build(coeffs):
        return Poly(field, [field.normalize(c) for c in coeffs])
    strat = st.lists(coeff, min_size=0, max_size=max_degree + 1).map(build)
    if nonzero:
        strat = strat.filter(lambda q: not q.is_zero())
    return strat
