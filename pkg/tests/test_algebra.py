from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tmzv.algebra import (
    Element,
    compositions,
    concat,
    depth,
    format_word,
    h0_words,
    h1_words,
    height,
    in_h0,
    index_from_word,
    indices,
    is_admissible,
    parse_index,
    parse_word,
    product,
    rho,
    s_map,
    sigma_map,
    subalgebra_class,
    weight,
    word_from_index,
)
from tmzv.errors import DomainError
from tmzv.tpoly import TVAR, TPoly

from .strategies import elements, words


def E(text):
    return Element.parse(text)


# ---------------------------------------------------------------------------
# indices and words

def test_word_from_index_examples():
    assert word_from_index((2,)) == "xy"
    assert word_from_index((2, 1)) == "xyy"
    assert word_from_index((3, 1, 2)) == "xxyyxy"


def test_index_from_word_examples():
    assert index_from_word("xy") == (2,)
    assert index_from_word("xyy") == (2, 1)
    with pytest.raises(DomainError):
        index_from_word("xx")
    with pytest.raises(DomainError):
        index_from_word("")


def test_index_statistics():
    k = (3, 1, 2)
    assert (weight(k), depth(k), height(k)) == (6, 3, 2)
    assert is_admissible(k) and not is_admissible((1, 2))


def test_index_enumeration_counts():
    assert len(list(compositions(5))) == 16
    assert len(indices(5, 2)) == 4
    assert len(indices(5, admissible=True)) == 8
    assert len(h0_words(4)) == 4 and len(h1_words(4)) == 8


def test_parsing_both_syntaxes():
    assert parse_word("z2 z1") == parse_word("z2z1") == "xyy"
    assert parse_word("1") == ""
    assert parse_index("2,1") == (2, 1)
    assert format_word("xyy", z_notation=True) == "z2z1"
    with pytest.raises(DomainError):
        parse_word("xqy")
    with pytest.raises(DomainError):
        parse_index("2,0")


@given(st.lists(st.integers(1, 4), min_size=1, max_size=4))
def test_index_word_round_trip(k):
    k = tuple(k)
    w = word_from_index(k)
    assert index_from_word(w) == k
    assert len(w) == weight(k)
    assert w.endswith("y")
    assert w.startswith("x") == is_admissible(k)


# ---------------------------------------------------------------------------
# classes and maps

def test_subalgebra_examples():
    assert subalgebra_class(E("xy")) == "h0"
    assert subalgebra_class(E("yy") + Element.word("xy", TVAR * 3)) == "h1"
    assert subalgebra_class(E("yx")) == "neither"


def test_sigma_examples():
    assert sigma_map(E("y")) == E("y") + Element.word("x", TVAR)
    assert sigma_map(E("x")) == E("x")
    assert sigma_map(E("yy")).format() == "yy + t*xy + t*yx + t^2*xx"


def test_s_map_examples():
    assert s_map(E("xy")) == E("xy")
    assert s_map(E("yy")) == E("yy") + Element.word("xy", TVAR)
    assert s_map(E("xxy")) == E("xxy")


def test_sigma_rho_letter_identity():
    for a in "xy":
        assert sigma_map(E(a)) - sigma_map(rho(a)) == E(a)


# ---------------------------------------------------------------------------
# products

def test_product_examples():
    assert product("t_sh", E("x"), E("y")).format() == "xy + yx - t*xx"
    assert product("t_sh", E("y"), E("y")).format() == "2*yy - 2t*xy"
    assert product("t_st", E("z2"), E("z3")).format(True) == "z2z3 + z3z2 + (1-2t)*z5"
    assert product("t_st", E("z1"), E("z1z1")).format(True) == \
        "3*z1z1z1 + (1-2t)*z1z2 + (1-2t)*z2z1 + (-t+t^2)*z3"
    assert product("sh", E("1"), E("xy")) == E("xy")
    assert product("concat", E("xy"), E("y")) == E("xyy")


def test_harmonic_products_need_h1():
    with pytest.raises(DomainError):
        product("t_st", E("yx"), E("y"))
    with pytest.raises(DomainError):
        product("st", E("y"), E("x"))


@given(elements(4), elements(4))
def test_shuffle_commutative(a, b):
    for kind in ("sh", "t_sh"):
        assert product(kind, a, b) == product(kind, b, a)


@given(elements(4, h1=True), elements(4, h1=True))
def test_harmonic_commutative(a, b):
    for kind in ("st", "t_st"):
        assert product(kind, a, b) == product(kind, b, a)


@given(elements(3), elements(3), elements(2))
def test_shuffle_associative(a, b, c):
    for kind in ("sh", "t_sh"):
        assert product(kind, product(kind, a, b), c) == product(kind, a, product(kind, b, c))


@given(elements(3, h1=True), elements(3, h1=True), elements(2, h1=True))
def test_harmonic_associative(a, b, c):
    for kind in ("st", "t_st"):
        assert product(kind, product(kind, a, b), c) == product(kind, a, product(kind, b, c))


@given(elements(4), elements(4))
def test_s_map_intertwines_shuffles(a, b):
    assert s_map(product("t_sh", a, b)) == product("sh", s_map(a), s_map(b))


@given(elements(4, h1=True), elements(4, h1=True))
def test_s_map_intertwines_harmonic_products(a, b):
    assert s_map(product("t_st", a, b)) == product("st", s_map(a), s_map(b))


@given(elements(4), elements(4))
def test_sigma_distributes_over_shuffle(a, b):
    assert sigma_map(product("sh", a, b)) == product("sh", sigma_map(a), sigma_map(b))


@given(elements(5))
def test_inverse_maps(a):
    assert s_map(s_map(a), negate_t=True) == a
    assert s_map(s_map(a, negate_t=True)) == a
    assert sigma_map(sigma_map(a), negate_t=True) == a


@given(elements(5), elements(5))
def test_sigma_is_multiplicative_for_concatenation(a, b):
    assert sigma_map(concat(a, b)) == concat(sigma_map(a), sigma_map(b))


@given(elements(4), elements(4))
def test_t_zero_specialization(a, b):
    assert product("t_sh", a, b).specialize_t(0) == product("sh", a.specialize_t(0), b.specialize_t(0))


@given(elements(4, h1=True), elements(4, h1=True))
def test_t_zero_specialization_harmonic(a, b):
    assert product("t_st", a, b).specialize_t(0) == product("st", a.specialize_t(0), b.specialize_t(0))


@given(elements(4, h0=True), elements(4, h0=True))
def test_h0_closed_under_products(a, b):
    for kind in ("sh", "t_sh", "st", "t_st"):
        assert in_h0(product(kind, a, b))


@given(elements(4))
def test_json_round_trip(a):
    assert Element.from_json(a.to_json()) == a


def test_specialize_rational_t():
    e = Element.word("xy", TPoly((1, 2)))
    assert e.specialize_t(Fraction(1, 2)) == Element.word("xy", TPoly((2,)))
