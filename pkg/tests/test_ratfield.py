from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pyquartet.errors import DivisionByZero, PoleAtPoint, TableMismatch, ZeroDenominator
from pyquartet.multipoly import DEFAULT_TABLE, VarTable, poly_const, poly_var
from pyquartet.ratfield import (
    RatFunc,
    rf_arith,
    rf_const,
    rf_eq,
    rf_eval,
    rf_format,
    rf_from_poly,
    rf_inverse,
    rf_make,
    rf_pow,
    rf_prob_equal,
    rf_var,
)

m, n, M, N = (rf_var(DEFAULT_TABLE, name) for name in DEFAULT_TABLE.names)
pm, pn = poly_var(DEFAULT_TABLE, "m"), poly_var(DEFAULT_TABLE, "n")

nonzero_polys = st.sampled_from([m, n, M, N, m + 1, m - n, m * n + 1, M * N - 2, 3 * m * m + n])
coefficients = st.fractions(min_value=-10, max_value=10, max_denominator=10)


@st.composite
def ratfuncs(draw):
    num = draw(coefficients) * draw(nonzero_polys) + draw(coefficients)
    den = draw(nonzero_polys) + draw(st.fractions(min_value=1, max_value=5, max_denominator=5))
    return num / den


def test_make_reduces_to_canonical_form():
    f = rf_make((pm + pn) * (pm - pn) * 6, (pm + pn) * -4)
    assert f.num == 3 * pn - 3 * pm
    assert f.den == poly_const(DEFAULT_TABLE, 2)
    g = rf_make(pm * 2, pm * pn * 4)
    assert g.num == 1
    assert g.den == 2 * pn


def test_make_zero_denominator():
    with pytest.raises(ZeroDenominator):
        rf_make(pm, poly_const(DEFAULT_TABLE, 0))


def test_zero_is_canonical():
    zero = (m + n) - (n + m)
    assert zero.is_zero
    assert zero.den == 1
    assert rf_format(zero) == "0"


def test_denominator_leading_coefficient_is_positive():
    f = m / (-n - 1)
    assert f.den == pn + 1
    assert f.num == -pm


def test_arithmetic():
    assert 1 / m + 1 / n == (m + n) / (m * n)
    assert (m / n) * (n / m) == 1
    assert (m * m - n * n) / (m - n) == m + n
    assert rf_arith(m, n, "add") == m + n
    assert rf_arith(m, n, "sub") == m - n
    assert rf_arith(m, n, "mul") == m * n
    assert rf_arith(m, n, "div") == m / n
    assert 2 - m == -(m - 2)


def test_equality_is_field_equality():
    assert rf_eq((m * m - 1) / (m - 1), m + 1)
    assert not rf_eq(m / n, n / m)
    assert (m + 1) / (m + 1) == 1
    assert rf_from_poly(pm) == m


def test_hash_is_canonical():
    assert hash((m * m - 1) / (m - 1)) == hash(m + 1)


def test_inverse():
    assert rf_inverse(m / (n + 1)) == (n + 1) / m
    with pytest.raises(DivisionByZero):
        rf_inverse(m - m)
    with pytest.raises(ZeroDivisionError):
        m / (n - n)


def test_pow():
    assert rf_pow(m / n, 2) == (m * m) / (n * n)
    assert rf_pow(m / n, -1) == n / m
    assert rf_pow(m / n, 0) == 1
    assert (m + 1) ** 3 == (m + 1) * (m + 1) * (m + 1)
    with pytest.raises(DivisionByZero):
        rf_pow(m - m, -2)


def test_table_mismatch():
    x = rf_var(VarTable(("x",)), "x")
    with pytest.raises(TableMismatch):
        m + x


def test_eval():
    f = (m * m + 1) / (n - 2)
    assert rf_eval(f, {"m": Fraction(1, 2), "n": 3}) == Fraction(5, 4)
    with pytest.raises(PoleAtPoint):
        rf_eval(f, {"m": 1, "n": 2})


def test_constant_value():
    assert rf_const(DEFAULT_TABLE, Fraction(3, 4)).constant_value == Fraction(3, 4)
    assert (m / m).is_constant
    with pytest.raises(ValueError):
        m.constant_value


def test_format():
    assert rf_format(2 * m) == "2*m"
    assert rf_format(m / (n + 1)) == "(m)/(n + 1)"
    assert rf_format(m / 2) == "(m)/(2)"


def test_prob_equal():
    lhs = (m + n) ** 2 / (m - n)
    rhs = (m * m + 2 * m * n + n * n) / (m - n)
    assert rf_prob_equal(lhs, rhs, trials=20, seed=7)
    assert not rf_prob_equal(lhs, rhs + 1 / (M * M + 1), trials=20, seed=7)


def test_prob_equal_resamples_poles():
    # 1/m has a pole only on m = 0; a tiny bound hits it often
    assert rf_prob_equal(1 / m, n / (m * n), trials=50, seed=3, bound=2)


def test_prob_equal_needs_a_trial():
    with pytest.raises(ValueError):
        rf_prob_equal(m, m, trials=0)


def test_constructor_reduces():
    assert RatFunc(pm * pn, pm) == n
    assert RatFunc(pm).den == 1


@given(a=ratfuncs(), b=ratfuncs(), c=ratfuncs())
@settings(max_examples=100, derandomize=True, deadline=None)
def test_field_axioms(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a + b) - b == a
    if not b.is_zero:
        assert (a / b) * b == a
        assert b * rf_inverse(b) == 1


@given(a=ratfuncs(), b=ratfuncs(), seed=st.integers(min_value=0, max_value=1000))
@settings(max_examples=100, derandomize=True, deadline=None)
def test_symbolic_and_randomized_equality_agree(a, b, seed):
    assert rf_prob_equal(a * b, b * a, trials=3, seed=seed)
    assert rf_eq(a, b) == rf_prob_equal(a, b, trials=5, seed=seed, bound=1000)
