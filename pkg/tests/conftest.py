import pytest
from hypothesis import settings, strategies as st

from mohlab import QQ, Polynomial, Ring, field_for

settings.register_profile("default", max_examples=200, deadline=None, derandomize=True)
settings.load_profile("default")

FIELDS = [QQ, field_for(2), field_for(3), field_for(5)]


def exponents(d=3, hi=4):
    return st.tuples(*[st.integers(0, hi)] * d)


@st.composite
def polys(draw, ring, max_terms=5, hi=4, nonzero=False):
    terms = draw(
        st.dictionaries(exponents(ring.nvars, hi), st.integers(-5, 5), max_size=max_terms)
    )
    f = Polynomial(ring, terms)
    if nonzero and f.is_zero():
        f = ring.monomial(draw(exponents(ring.nvars, hi)))
    return f


@pytest.fixture
def R():
    return Ring(3)
