from hypothesis import strategies as st

from tmzv.algebra import Element
from tmzv.tpoly import TPoly

small_ints = st.integers(-3, 3)
tpolys = st.lists(small_ints, max_size=3).map(TPoly)


def words(max_len: int = 4, h1: bool = False, h0: bool = False):
    body = st.text(alphabet="xy", max_size=max_len)
    if h0:
        return st.one_of(st.just(""), st.text(alphabet="xy", max_size=max(max_len - 2, 0)).map(lambda w: "x" + w + "y"))
    if h1:
        return st.one_of(st.just(""), st.text(alphabet="xy", max_size=max_len - 1).map(lambda w: w + "y"))
    return body


def elements(max_len: int = 3, h1: bool = False, h0: bool = False, max_terms: int = 2):
    term = st.tuples(words(max_len, h1, h0), tpolys)
    return st.lists(term, min_size=1, max_size=max_terms).map(
        lambda ts: sum((Element.word(w, c) for w, c in ts), Element()))
