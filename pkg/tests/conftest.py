from fractions import Fraction

from hypothesis import settings, strategies as st

from mvopq.matpoly import MatPoly

settings.register_profile("default", deadline=None, max_examples=40)
settings.load_profile("default")

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)
nonzero_rationals = rationals.filter(bool)


@st.composite
def matrices(draw, size=2):
    return [[draw(rationals) for _ in range(size)] for _ in range(size)]


@st.composite
def matpolys(draw, size=2, max_degree=4, laurent=False):
    low = draw(st.integers(-2, 0)) if laurent else 0
    n = draw(st.integers(0, max_degree + 1))
    return MatPoly([draw(matrices(size)) for _ in range(n)], low_degree=low, size=size)


@st.composite
def even_matpolys(draw, size=2, max_half=3):
    terms = {2 * k: draw(matrices(size)) for k in range(draw(st.integers(0, max_half + 1)))}
    return MatPoly.from_dict(terms, size)


