"""Exact rational scalars.

Rationals are ``fractions.Fraction`` over Python's unbounded ``int``: always reduced, with a
positive denominator, and zero stored as ``0/1``.
"""
import re
from fractions import Fraction
from numbers import Rational as RationalLike
from typing import Literal, Union

from pyquartet.errors import DivisionByZero, ScalarSyntaxError, ZeroDenominator

Rational = Fraction
IntegerLike = Union[int, RationalLike]
ArithOp = Literal["add", "sub", "mul", "div"]

_RATIONAL_RE = re.compile(r"\s*([+-]?)(\d+)(?:/(\d+))?\s*")


def _as_integer(value: IntegerLike) -> int:
    if isinstance(value, int):
        return value
    if isinstance(value, RationalLike) and value.denominator == 1:
        return int(value.numerator)
    raise TypeError(f"expected an integer, got {value!r}")


def rat_make(num: IntegerLike, den: IntegerLike = 1) -> Fraction:
    num, den = _as_integer(num), _as_integer(den)
    if den == 0:
        raise ZeroDenominator(f"{num}/0")
    return Fraction(num, den)


def as_rational(value) -> Fraction:
    """Coerce an int or any ``numbers.Rational`` to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, RationalLike):
        return Fraction(int(value.numerator), int(value.denominator))
    raise TypeError(f"expected a rational number, got {value!r}")


def rat_arith(a, b, op: ArithOp) -> Fraction:
    a, b = as_rational(a), as_rational(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if b == 0:
            raise DivisionByZero(f"{rat_format(a)} / 0")
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def rat_cmp(a, b) -> int:
    """Three-way comparison by cross-multiplication: -1, 0 or 1."""
    a, b = as_rational(a), as_rational(b)
    lhs = a.numerator * b.denominator
    rhs = b.numerator * a.denominator
    return (lhs > rhs) - (lhs < rhs)


def rat_parse(text: str) -> Fraction:
    match = _RATIONAL_RE.fullmatch(text)
    if match is None:
        raise ScalarSyntaxError(f"not a rational: {text!r}")
    sign, num, den = match.groups()
    value = rat_make(int(num), int(den) if den is not None else 1)
    return -value if sign == "-" else value


def rat_format(value) -> str:
    value = as_rational(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
