"""The rational function field over a ``VarTable``: reduced quotients of polynomials.

Canonical form: numerator and denominator have integer coefficients with no common integer
factor, no common polynomial factor, and the denominator's leading coefficient is positive.
"""
import logging
import random
from fractions import Fraction
from numbers import Rational as RationalLike
from typing import Literal, Mapping, Optional

from pyquartet.errors import DivisionByZero, PoleAtPoint, TableMismatch, ZeroDenominator
from pyquartet.multipoly import (
    Polynomial,
    VarTable,
    poly_cancel,
    poly_eval,
    poly_primitive,
)
from pyquartet.scalar import as_rational

logger = logging.getLogger(__name__)

# resampling attempts per random point before giving up on a pole-riddled function
MAX_RESAMPLES = 1000


def _normalized(num: Polynomial, den: Polynomial) -> "RatFunc":
    """Fix integer content and sign of an already coprime pair."""
    if num.is_zero:
        return RatFunc._wrap(num, Polynomial.constant(num.table, 1))
    cn, pn = poly_primitive(num)
    cd, pd = poly_primitive(den)
    ratio = cn / cd
    return RatFunc._wrap(pn * ratio.numerator, pd * ratio.denominator)


class RatFunc:
    """Immutable element of Q(x1, ..., xk)."""

    __slots__ = ("num", "den")

    def __init__(self, num: Polynomial, den: Optional[Polynomial] = None):
        reduced = rf_make(num, den if den is not None else Polynomial.constant(num.table, 1))
        object.__setattr__(self, "num", reduced.num)
        object.__setattr__(self, "den", reduced.den)

    def __setattr__(self, key, value):
        raise AttributeError("RatFunc is immutable")

    @classmethod
    def _wrap(cls, num: Polynomial, den: Polynomial) -> "RatFunc":
        f = cls.__new__(cls)
        object.__setattr__(f, "num", num)
        object.__setattr__(f, "den", den)
        return f

    @property
    def table(self) -> VarTable:
        return self.num.table

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_constant(self) -> bool:
        return self.num.is_constant and self.den.is_constant

    @property
    def constant_value(self) -> Fraction:
        if not self.is_constant:
            raise ValueError(f"{self} is not constant")
        return self.num.constant_value / self.den.constant_value

    def _coerce(self, other) -> "RatFunc":
        if isinstance(other, RatFunc):
            if other.table != self.table:
                raise TableMismatch(f"{self.table.names} vs {other.table.names}")
            return other
        if isinstance(other, Polynomial):
            return rf_from_poly(other)
        if isinstance(other, RationalLike):
            return rf_const(self.table, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        return other if other is NotImplemented else _add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return other if other is NotImplemented else _add(self, -other)

    def __rsub__(self, other):
        other = self._coerce(other)
        return other if other is NotImplemented else _add(other, -self)

    def __mul__(self, other):
        other = self._coerce(other)
        return other if other is NotImplemented else _mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        return other if other is NotImplemented else _mul(self, rf_inverse(other))

    def __rtruediv__(self, other):
        other = self._coerce(other)
        return other if other is NotImplemented else _mul(other, rf_inverse(self))

    def __neg__(self):
        return RatFunc._wrap(-self.num, self.den)

    def __pos__(self):
        return self

    def __pow__(self, k: int):
        return rf_pow(self, k)

    def __bool__(self):
        return not self.num.is_zero

    def __eq__(self, other):
        if isinstance(other, (Polynomial, RationalLike)):
            other = self._coerce(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return rf_eq(self, other)

    def __hash__(self):
        return hash((self.num, self.den))

    def __str__(self):
        return rf_format(self)

    def __repr__(self):
        return f"RatFunc({rf_format(self)!r})"


def rf_make(num: Polynomial, den: Polynomial) -> RatFunc:
    if num.table != den.table:
        raise TableMismatch(f"{num.table.names} vs {den.table.names}")
    if den.is_zero:
        raise ZeroDenominator(f"({num}) / 0")
    if num.is_zero:
        return _normalized(num, den)
    if den.is_constant:
        return _normalized(num, den)
    _, num, den = poly_cancel(num, den)
    return _normalized(num, den)


def rf_from_poly(p: Polynomial) -> RatFunc:
    return _normalized(p, Polynomial.constant(p.table, 1))


def rf_const(table: VarTable, c) -> RatFunc:
    c = as_rational(c)
    return RatFunc._wrap(
        Polynomial.constant(table, c.numerator), Polynomial.constant(table, c.denominator)
    )


def rf_var(table: VarTable, name: str) -> RatFunc:
    return RatFunc._wrap(Polynomial.variable(table, name), Polynomial.constant(table, 1))


def rf_inverse(f: RatFunc) -> RatFunc:
    if f.is_zero:
        raise DivisionByZero(f"1 / 0 over {f.table.names}")
    return _normalized(f.den, f.num)


def _add(a: RatFunc, b: RatFunc) -> RatFunc:
    if a.is_zero:
        return b
    if b.is_zero:
        return a
    g, da, db = poly_cancel(a.den, b.den)
    if g.is_constant:
        return _normalized(a.num * b.den + b.num * a.den, a.den * b.den)
    t = a.num * db + b.num * da
    if t.is_zero:
        return _normalized(t, g)
    _, t, g = poly_cancel(t, g)
    return _normalized(t, da * db * g)


def _mul(a: RatFunc, b: RatFunc) -> RatFunc:
    if a.is_zero or b.is_zero:
        return _normalized(Polynomial.constant(a.table, 0), a.den)
    an, ad, bn, bd = a.num, a.den, b.num, b.den
    if not (an.is_constant or bd.is_constant):
        _, an, bd = poly_cancel(an, bd)
    if not (bn.is_constant or ad.is_constant):
        _, bn, ad = poly_cancel(bn, ad)
    return _normalized(an * bn, ad * bd)


def rf_arith(a: RatFunc, b: RatFunc, op: Literal["add", "sub", "mul", "div"]) -> RatFunc:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def rf_neg(f: RatFunc) -> RatFunc:
    return -f


def rf_pow(f: RatFunc, k: int) -> RatFunc:
    if not isinstance(k, int):
        raise TypeError(f"rational function exponent must be an integer, got {k!r}")
    if k < 0:
        return rf_pow(rf_inverse(f), -k)
    # powers of coprime polynomials stay coprime
    return _normalized(f.num ** k, f.den ** k)


def rf_eq(a: RatFunc, b: RatFunc) -> bool:
    """Field equality by cross-multiplication."""
    return (a.num * b.den - b.num * a.den).is_zero


def rf_eval(f: RatFunc, subst: Mapping[str, RationalLike]) -> Fraction:
    den = poly_eval(f.den, subst)
    if den == 0:
        raise PoleAtPoint(f"denominator {f.den} vanishes at {dict(subst)}")
    return poly_eval(f.num, subst) / den


def random_point(rng: random.Random, names, bound: int):
    """One rational point: numerators uniform in [-bound, bound], denominators in [1, bound]."""
    return {
        name: Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) for name in names
    }


def rf_prob_equal(
    a: RatFunc, b: RatFunc, trials: int = 20, seed: int = 0, bound: int = 2 ** 16
) -> bool:
    """Randomized identity test: False at the first disagreeing point, True otherwise."""
    if trials < 1:
        raise ValueError("rf_prob_equal needs at least one trial")
    if a.table != b.table:
        raise TableMismatch(f"{a.table.names} vs {b.table.names}")
    rng = random.Random(seed)
    names = a.table.names
    for _ in range(trials):
        for _ in range(MAX_RESAMPLES):
            point = random_point(rng, names, bound)
            try:
                left, right = rf_eval(a, point), rf_eval(b, point)
            except PoleAtPoint:
                logger.debug("pole at %s, resampling", point)
                continue
            break
        else:
            raise PoleAtPoint(f"no pole-free point found in {MAX_RESAMPLES} draws")
        if left != right:
            return False
    return True


def rf_format(f: RatFunc) -> str:
    if f.den == 1:
        return str(f.num)
    return f"({f.num})/({f.den})"
