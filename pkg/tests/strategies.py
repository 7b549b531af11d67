"""Hypothesis strategies shared across test modules."""

from hypothesis import strategies as st

from chios.realization import VectorConfig

nonzero_vec = st.tuples(*[st.integers(-3, 3)] * 3).filter(any)


@st.composite
def configs(draw, min_n=3, max_n=7):
    vs = draw(st.lists(nonzero_vec, min_size=min_n, max_size=max_n))
    return VectorConfig(3, vs)


@st.composite
def affine_configs(draw, min_n=3, max_n=7):
    pts = draw(st.lists(st.tuples(st.integers(-3, 3), st.integers(-3, 3)),
                        min_size=min_n, max_size=max_n, unique=True))
    return VectorConfig(3, [(x, y, 1) for x, y in pts])


@st.composite
def orders(draw, n):
    return tuple(draw(st.permutations(range(1, n + 1))))
