from hypothesis import strategies as st

from uqplus.free import FreeElement
from uqplus.scalar import LaurentPoly, Scalar


def laurent(max_terms=3):
    return st.dictionaries(st.integers(-3, 3), st.integers(-4, 4), max_size=max_terms).map(
        LaurentPoly.from_dict)


def scalars():
    def build(pair):
        n, d = pair
        if d.is_zero():
            return Scalar(n)
        return Scalar(n) / Scalar(d)
    return st.tuples(laurent(), laurent(2)).map(build)


def words(max_len=3):
    return st.text(alphabet="xy", max_size=max_len)


def free_elements(max_terms=3, max_len=3):
    return st.dictionaries(words(max_len), st.integers(-3, 3), max_size=max_terms).map(FreeElement)
