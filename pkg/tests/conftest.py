from fractions import Fraction

import hypothesis.strategies as st
from hypothesis import settings

from minorsum.algebra import MultiPoly

settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")


def small_fractions(bound=9, max_den=6):
    return st.builds(
        Fraction,
        st.integers(-bound, bound),
        st.integers(1, max_den),
    )


@st.composite
def multipolys(draw, nvars=None, max_terms=20, max_exp=3, max_coef=9):
    k = draw(st.integers(1, 5)) if nvars is None else nvars
    terms = draw(
        st.dictionaries(
            st.tuples(*[st.integers(0, max_exp)] * k),
            st.integers(-max_coef, max_coef),
            max_size=max_terms,
        )
    )
    return MultiPoly(k, terms)


@st.composite
def skew_fraction_matrices(draw, dims=(0, 2, 4, 6, 8)):
    from minorsum.linalg import SkewMatrix

    n = draw(st.sampled_from(dims))
    upper = {
        (i, j): draw(small_fractions())
        for i in range(n) for j in range(i + 1, n)
    }
    return SkewMatrix.from_upper(n, lambda i, j: upper[i, j])
