from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tmzv.algebra import Element, h0_words, h1_words
from tmzv.errors import DomainError
from tmzv.regularization import RegDecomposition, reg_decompose, z_reg_eval
from tmzv.relations import eds_relation, fds_relation, hoffman_relation
from tmzv.tpoly import TPoly
from tmzv.zeta import ZetaCombination, z_symbolic

from .strategies import elements

E = Element.parse


def test_decomposition_examples():
    d = reg_decompose("sh", E("y"))
    assert d.parts == [Element(), E("1")]
    d = reg_decompose("sh", E("yxy"))
    assert d.parts == [E("xyy").scale(TPoly((-2,))), E("xy")]
    d = reg_decompose("st", E("yxy"))
    assert [p.format() for p in d.parts] == ["-xyy - xxy", "xy"]


def test_regularized_map_examples():
    assert z_reg_eval("sh", E("y")) == ZetaCombination.symbol((), {(0, 1): Fraction(1)})
    assert z_reg_eval("sh", E("xy")) == ZetaCombination.symbol((2,))
    at_t0 = z_reg_eval("sh", E("yxy")).specialize(0)
    expected = ZetaCombination.symbol((2,), {(0, 1): Fraction(1)}) + ZetaCombination.symbol((2, 1), -2)
    assert at_t0 == expected


def test_domain_errors():
    with pytest.raises(DomainError):
        reg_decompose("sh", E("yx"))
    with pytest.raises(DomainError):
        reg_decompose("harmonic", E("y"))


@pytest.mark.parametrize("kind", ["sh", "st"])
@pytest.mark.parametrize("weight", range(1, 10))
def test_round_trip_all_words(kind, weight):
    for w in h1_words(weight):
        e = E(w)
        d = reg_decompose(kind, e)
        assert d.reconstruct() == e, w


@pytest.mark.parametrize("kind", ["sh", "st"])
def test_parts_lie_in_h0(kind):
    for w in h1_words(6):
        for part in reg_decompose(kind, E(w)).parts:
            assert all(u == "" or (u[0] == "x" and u[-1] == "y") for u in part.terms)


@given(elements(5, h1=True))
def test_round_trip_random_elements(e):
    for kind in ("sh", "st"):
        assert reg_decompose(kind, e).reconstruct() == e


@given(elements(5, h0=True))
def test_agreement_on_h0(e):
    for kind in ("sh", "st"):
        assert z_reg_eval(kind, e) == z_symbolic(e)


@given(st.sampled_from(h1_words(6)), st.integers(0, 6))
def test_uniqueness_under_perturbation(w, which):
    e = E(w)
    for kind in ("sh", "st"):
        d = reg_decompose(kind, e)
        parts = list(d.parts) + [Element()]
        i = which % len(parts)
        parts[i] = parts[i] + E("xxy")
        assert RegDecomposition(kind, parts).reconstruct() != e


def test_json_round_trip():
    d = reg_decompose("st", E("yyxy"))
    assert RegDecomposition.from_json(d.to_json()).parts == d.parts


def test_eds_examples():
    hoff = hoffman_relation((2,)).combination
    eds = eds_relation(E("y"), E("xy"), "sh").combination
    # the regularized relation is the Hoffman relation up to sign
    assert eds == hoff or eds == -hoff
    assert eds_relation(E("xy"), E("xy")).combination == fds_relation(E("xy"), E("xy")).combination
    assert eds_relation(E("xy"), E("xy")).combination.T_degree() == 0


@pytest.mark.parametrize("kind", ["sh", "st"])
def test_eds_numeric(kind):
    rel = eds_relation(E("y"), E("xyy"), kind)
    for t in (0, Fraction(1, 2)):
        for r in rel.T_residuals(t):
            assert abs(r.value) < 1e-5


def test_h0_inputs_have_no_T():
    for w in h0_words(5):
        assert z_reg_eval("st", E(w)).T_degree() == 0
