from hypothesis import strategies as st

from kshapes.partitions import enumerate_kshapes


@st.composite
def kshapes(draw, ks=(2, 3, 4), max_n=7):
    """(k, shape) with shape drawn from the enumerated k-shapes."""
    k = draw(st.sampled_from(ks))
    n = draw(st.integers(0, max_n))
    return k, draw(st.sampled_from(enumerate_kshapes(k, n)))


partitions = st.lists(st.integers(1, 8), max_size=7).map(lambda xs: tuple(sorted(xs, reverse=True)))
