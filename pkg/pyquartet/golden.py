"""Published closed forms for the quartet scene, kept as script expression text.

They are parsed with ``evaluate_expression`` and compared by field equality, never as strings.
"""
from typing import Tuple

from pyquartet.geometry import Point
from pyquartet.interpreter import evaluate_expression
from pyquartet.multipoly import DEFAULT_TABLE, VarTable
from pyquartet.ratfield import RatFunc

# second factor vanishes when C is on the circle ABD on the same side as B, the first when
# C is on the opposite arc
CYCLIC_FACTOR_OPPOSITE_ARC = "(M*N - 1)*(m*n - 1) + (M + N)*(n + m)"
CYCLIC_FACTOR_SAME_ARC = "M*N*(n + m) - m*n*(M + N) + M + N - m - n"

LEVERSHA_RADIUS = (
    "(N - n)*(N*n + 1)*(m^2 + 1)*(M^2 + 1)"
    f" / (({CYCLIC_FACTOR_OPPOSITE_ARC}) * ({CYCLIC_FACTOR_SAME_ARC}))"
)

_STAR_DENOMINATOR = (
    "((M*N*(m*n - 1) + (M + N)*(m + n) - m*n + 1)"
    " * (M*N*(m + n) - m*n*(M + N) + M + N - m - n))"
)

BSTAR_X = f"(M*m + M - m + 1)*(M*m - M + m + 1)*(N*n + 1)*(N - n) / {_STAR_DENOMINATOR}"
BSTAR_Y = f"2*(N*n + 1)*(N - n)*(M*m + 1)*(M - m) / {_STAR_DENOMINATOR}"
CSTAR_X = f"(M*m + M - m + 1)*(M*m - M + m + 1)*(N*n + 1)*(-n + N) / {_STAR_DENOMINATOR}"
CSTAR_Y = f"-2*(N*n + 1)*(-n + N)*(M*m + 1)*(-m + M) / {_STAR_DENOMINATOR}"


def _ratfunc(text: str, table: VarTable) -> RatFunc:
    value = evaluate_expression(text, table)
    if not isinstance(value, RatFunc):
        raise TypeError(f"fixture {text!r} is not a rational function")
    return value


def leversha_radius(table: VarTable = DEFAULT_TABLE) -> RatFunc:
    return _ratfunc(LEVERSHA_RADIUS, table)


def bstar(table: VarTable = DEFAULT_TABLE) -> Point:
    return Point(_ratfunc(BSTAR_X, table), _ratfunc(BSTAR_Y, table))


def cstar(table: VarTable = DEFAULT_TABLE) -> Point:
    return Point(_ratfunc(CSTAR_X, table), _ratfunc(CSTAR_Y, table))


def cyclicity_factors(table: VarTable = DEFAULT_TABLE) -> Tuple[RatFunc, RatFunc]:
    """(opposite-arc factor, same-arc factor); C lies on circle ABD iff their product vanishes."""
    return (_ratfunc(CYCLIC_FACTOR_OPPOSITE_ARC, table),
            _ratfunc(CYCLIC_FACTOR_SAME_ARC, table))
