from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tmzv.errors import PoleError
from tmzv.series import (
    MultiSeries,
    all_exponents,
    binomial_series,
    geometric,
    hyp2f1_series,
    pochhammer,
    s_add,
    s_derivative,
    s_mul,
    s_shift_up,
)
from tmzv.tpoly import TPoly

VARS = ("u", "v", "W")
WEIGHTS = (1, 1, 2)
fractions = st.fractions(min_value=-2, max_value=2, max_denominator=7)


def test_univariate_helpers():
    assert s_mul(geometric(4), [1, -1, 0, 0, 0]) == [1, 0, 0, 0, 0]
    assert s_derivative([1, 2, 3]) == [2, 6]
    assert s_shift_up([1, 2, 3, 4], 2) == [0, 0, 1, 2]
    assert s_add([1, 2], [3, 4]) == [4, 6]
    assert binomial_series(1, 3) == [1, 1, 1, 1]
    assert binomial_series(2, 3) == [1, 2, 3, 4]


def test_pochhammer():
    assert pochhammer(Fraction(1, 2), 3) == Fraction(15, 8)
    assert pochhammer(5, 0) == 1


def test_hyp2f1_series():
    # F(1, 1; 2; z) = -log(1 - z)/z
    assert hyp2f1_series(1, 1, 2, 4) == [1, Fraction(1, 2), Fraction(1, 3), Fraction(1, 4), Fraction(1, 5)]
    assert hyp2f1_series(-2, 3, 1, 4)[3:] == [0, 0]
    with pytest.raises(PoleError):
        hyp2f1_series(1, 1, -1, 4)


def test_weighted_cap_enumeration():
    exps = all_exponents(VARS, 2, WEIGHTS)
    assert exps == [(0, 0, 0), (0, 1, 0), (1, 0, 0), (0, 0, 1), (0, 2, 0), (1, 1, 0), (2, 0, 0)]


def _series(coeffs, cap=4):
    return MultiSeries(VARS, {e: c for e, c in zip(all_exponents(VARS, cap, WEIGHTS), coeffs)}, cap, WEIGHTS)


@given(st.lists(fractions, min_size=1, max_size=12), st.lists(fractions, max_size=12))
def test_inverse_is_two_sided(head, rest):
    if head[0] == 0:
        head[0] = Fraction(1)
    s = _series(head + rest)
    one = MultiSeries.constant(VARS, 1, 4, WEIGHTS)
    assert (s * s.inverse()).coeffs == one.coeffs


@given(st.lists(fractions, max_size=12), st.lists(fractions, max_size=12), st.lists(fractions, max_size=12))
def test_ring_laws(a, b, c):
    a, b, c = _series(a), _series(b), _series(c)
    assert ((a * b) * c).coeffs == (a * (b * c)).coeffs
    assert (a * (b + c)).coeffs == (a * b + a * c).coeffs
    assert (a * b).coeffs == (b * a).coeffs


def test_cap_truncates():
    u = MultiSeries.variable(VARS, "u", 3, WEIGHTS)
    W = MultiSeries.variable(VARS, "W", 3, WEIGHTS)
    assert (u * W).coeffs == {(1, 0, 1): 1}
    assert (W * W).coeffs == {}


def test_tpoly_coefficients_and_substitution():
    t = TPoly((0, 1))
    s = MultiSeries.constant(VARS, TPoly((1,)), 2, WEIGHTS) - MultiSeries.variable(VARS, "v", 2, WEIGHTS, c=t)
    inv = s.inverse()
    assert inv.coefficient((0, 2, 0)) == t * t
    assert inv.substitute((0, Fraction(1, 2), 0))(Fraction(1, 2)) == 1 + Fraction(1, 4) + Fraction(1, 16)


def test_inverse_of_zero_constant_is_a_pole():
    with pytest.raises(PoleError):
        MultiSeries.variable(VARS, "u", 2, WEIGHTS).inverse()
