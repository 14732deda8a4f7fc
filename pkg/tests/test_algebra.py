from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chernindex.algebra import (
    GradedClass,
    PowerSeries,
    TwistPoly,
    format_graded,
    graded_mul,
    series_div,
    series_exp,
    series_log,
)
from chernindex.errors import DimensionMismatchError, DomainError

N = TwistPoly.var()

small_q = st.fractions(min_value=-5, max_value=5, max_denominator=7)
twist = st.lists(small_q, max_size=3).map(lambda cs: TwistPoly(tuple(cs)))


@st.composite
def graded_triples(draw):
    d = draw(st.integers(0, 4))
    mk = lambda: GradedClass(d, tuple(draw(st.lists(twist, min_size=d + 1, max_size=d + 1))))
    return mk(), mk(), mk()


# --- graded_mul -------------------------------------------------------------


def test_graded_mul_binomial():
    a = GradedClass(2, (1, 1))
    assert graded_mul(a, a) == GradedClass(2, (1, 2, 1))


def test_graded_mul_truncates():
    a = GradedClass(1, (1, 1))
    assert graded_mul(a, a) == GradedClass(1, (1, 2))


def test_graded_mul_twist_coefficients():
    a = GradedClass(2, (1, N))
    assert a * a == GradedClass(2, (1, 2 * N, N * N))


def test_graded_mul_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        graded_mul(GradedClass.one(1), GradedClass.one(2))


def test_hyperplane_nilpotent():
    H = GradedClass.hyperplane(3)
    assert (H**3).parts[3] == 1
    assert (H**4).is_zero()


@settings(max_examples=100, deadline=None)
@given(graded_triples())
def test_ring_axioms(abc):
    a, b, c = abc
    assert a * (b * c) == (a * b) * c
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a * GradedClass.one(a.dim) == a


# --- rationals and TwistPoly ------------------------------------------------

big = st.integers(min_value=-(10**200), max_value=10**200).filter(bool)


@settings(max_examples=100, deadline=None)
@given(big, big)
def test_rational_exact_inverse(p, q):
    x = F(p, q)
    assert x * (1 / x) == 1


def test_rational_thousand_digits():
    a = F(10**1000 + 1, 3 * 10**999)
    b = F(7, 10**1000 - 1)
    s = a + b
    assert s == F((10**1000 + 1) * (10**1000 - 1) + 21 * 10**999, 3 * 10**999 * (10**1000 - 1))
    assert s.denominator > 0


def test_twistpoly_canonical_zero():
    assert TwistPoly((0, 0, 0)) == TwistPoly()
    assert TwistPoly((1, 2, 0)).coeffs == (1, 2)
    assert N - N == TwistPoly()


@settings(max_examples=100, deadline=None)
@given(twist, twist, st.integers(-10, 10))
def test_twist_eval_is_ring_hom(p, q, m):
    assert (p * q)(m) == p(m) * q(m)
    assert (p + q)(m) == p(m) + q(m)


@pytest.mark.parametrize(
    "poly, text",
    [
        (TwistPoly((0, 4)), "4*N"),
        (TwistPoly((1, F(3, 2), F(1, 2))), "1/2*N^2 + 3/2*N + 1"),
        (TwistPoly((-20, -60, 6)), "6*N^2 - 60*N - 20"),
        (TwistPoly((0, -1, 1)), "N^2 - N"),
        (TwistPoly((F(-1, 3),)), "-1/3"),
        (TwistPoly(), "0"),
    ],
)
def test_twistpoly_format(poly, text):
    assert str(poly) == text


def test_graded_format():
    assert format_graded(GradedClass(2, (2, 0, -4))) == "2 - 4*H^2"
    assert format_graded(GradedClass(2, (1, N, N * N / 2 - 3))) == "1 + N*H + (1/2*N^2 - 3)*H^2"
    assert format_graded(GradedClass(2, (2, -1, F(3, 2)))) == "2 - H + 3/2*H^2"
    assert format_graded(GradedClass.zero(3)) == "0"


# --- power series -----------------------------------------------------------


def test_exp_of_x():
    assert series_exp(PowerSeries.x(2)).coeffs == (1, 1, F(1, 2))


def test_exp_of_zero():
    assert series_exp(PowerSeries((), 4)) == PowerSeries.one(4)


def test_exp_of_2x():
    # e^(2x) = sum (2x)^k / k!
    assert series_exp(PowerSeries((0, 2), 3)).coeffs == (1, 2, 2, F(4, 3))


def test_exp_rejects_constant():
    with pytest.raises(DomainError):
        series_exp(PowerSeries((1, 1), 3))


def test_log_mercator():
    assert series_log(PowerSeries((1, 1), 3)).coeffs == (0, 1, F(-1, 2), F(1, 3))


def test_log_of_one():
    assert series_log(PowerSeries.one(5)) == PowerSeries((), 5)


def test_log_rejects_bad_constant():
    with pytest.raises(DomainError):
        series_log(PowerSeries((2, 1), 3))


@settings(max_examples=20, deadline=None)
@given(st.lists(small_q, min_size=6, max_size=6))
def test_exp_log_round_trip(cs):
    s = PowerSeries((0,) + tuple(cs), 6)
    assert series_log(series_exp(s)) == s
    f = PowerSeries((1,) + tuple(cs), 6)
    assert series_exp(series_log(f)) == f


def test_div_todd_series():
    x = PowerSeries.x(5)
    one_minus = 1 - series_exp(-x)
    td = series_div(x, one_minus)
    assert td.order == 4
    assert td.coeffs == (1, F(1, 2), F(1, 12), 0, F(-1, 720))


def test_div_self():
    s = PowerSeries((3, 1, 4), 4)
    assert series_div(s, s) == PowerSeries.one(4)


def test_div_geometric():
    one_plus = PowerSeries((1, 1), 3)
    assert series_div(one_plus, one_plus * one_plus).coeffs == (1, -1, 1, -1)


def test_div_rejects_misaligned():
    with pytest.raises(DomainError):
        series_div(PowerSeries((1,), 3), PowerSeries.x(3))
    with pytest.raises(DomainError):
        series_div(PowerSeries.one(3), PowerSeries((), 3))


def test_series_truncation_causal():
    # coefficient e of a product depends only on inputs up to e
    a = PowerSeries((1, 2, 3, 4), 3)
    b = PowerSeries((1, 2, 3, 99), 3)
    assert (a * a).coeffs[:3] == (b * b).coeffs[:3]
    assert series_exp(a - 1).coeffs[:3] == series_exp(b - 1).coeffs[:3]


def test_no_floats():
    with pytest.raises(TypeError):
        TwistPoly((0.5,))
