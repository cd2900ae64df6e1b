from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pyquartet.errors import DivisionByZero, ScalarSyntaxError, ZeroDenominator
from pyquartet.scalar import rat_arith, rat_cmp, rat_format, rat_make, rat_parse

rationals = st.fractions(max_denominator=10 ** 6)


def test_rat_make_reduces():
    assert rat_make(6, -4) == Fraction(-3, 2)
    assert rat_make(6, -4).denominator == 2
    assert rat_make(0, 5) == Fraction(0, 1)
    assert rat_make(0, 5).denominator == 1


def test_rat_make_zero_denominator():
    with pytest.raises(ZeroDenominator):
        rat_make(1, 0)
    with pytest.raises(ZeroDivisionError):
        rat_make(1, 0)


def test_rat_make_rejects_non_integers():
    with pytest.raises(TypeError):
        rat_make(Fraction(1, 2), 3)


@pytest.mark.parametrize("a, b, op, expected", [
    (Fraction(1, 2), Fraction(1, 3), "add", Fraction(5, 6)),
    (Fraction(1, 2), Fraction(1, 3), "sub", Fraction(1, 6)),
    (Fraction(2, 3), Fraction(3, 4), "mul", Fraction(1, 2)),
    (Fraction(2, 3), Fraction(4, 3), "div", Fraction(1, 2)),
    (1, 2, "div", Fraction(1, 2)),
])
def test_rat_arith(a, b, op, expected):
    assert rat_arith(a, b, op) == expected


def test_rat_arith_division_by_zero():
    with pytest.raises(DivisionByZero):
        rat_arith(1, 0, "div")


def test_rat_cmp():
    assert rat_cmp(Fraction(1, 3), Fraction(1, 2)) == -1
    assert rat_cmp(Fraction(2, 4), Fraction(1, 2)) == 0
    assert rat_cmp(Fraction(-1, 3), Fraction(-1, 2)) == 1


@pytest.mark.parametrize("text, expected", [
    ("3", Fraction(3)),
    ("-7/21", Fraction(-1, 3)),
    (" 1/2 ", Fraction(1, 2)),
    ("+4/2", Fraction(2)),
])
def test_rat_parse(text, expected):
    assert rat_parse(text) == expected


@pytest.mark.parametrize("text", ["", "1/", "/2", "1.5", "a", "1//2", "- 1"])
def test_rat_parse_rejects(text):
    with pytest.raises(ScalarSyntaxError):
        rat_parse(text)


def test_rat_parse_zero_denominator():
    with pytest.raises(ZeroDenominator):
        rat_parse("1/0")


def test_rat_format():
    assert rat_format(Fraction(-3, 6)) == "-1/2"
    assert rat_format(Fraction(4, 2)) == "2"
    assert rat_format(0) == "0"


@given(a=rationals, b=rationals, c=rationals)
@settings(max_examples=100, derandomize=True)
def test_field_axioms(a, b, c):
    assert rat_arith(a, rat_arith(b, c, "add"), "mul") == \
        rat_arith(rat_arith(a, b, "mul"), rat_arith(a, c, "mul"), "add")
    assert rat_arith(rat_arith(a, b, "add"), b, "sub") == a
    if b != 0:
        assert rat_arith(rat_arith(a, b, "div"), b, "mul") == a


@given(a=rationals)
@settings(max_examples=100, derandomize=True)
def test_format_parse_identity(a):
    assert rat_parse(rat_format(a)) == a
