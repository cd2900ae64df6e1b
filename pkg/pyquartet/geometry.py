"""Analytic geometry with rational-function coordinates.

Every degeneracy guard asks whether a rational function is identically zero, never whether it
vanishes at some point.
"""
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as RationalLike
from typing import Mapping, Tuple, Union

from pyquartet.errors import ConjugateAtInfinity, DegenerateConstruction, TableMismatch
from pyquartet.multipoly import DEFAULT_TABLE, Polynomial, VarTable
from pyquartet.ratfield import RatFunc, rf_const, rf_eval, rf_format, rf_from_poly, rf_var

Scalar = Union[RatFunc, Polynomial, RationalLike, str]


def as_ratfunc(value: Scalar, table: VarTable = DEFAULT_TABLE) -> RatFunc:
    """Coerce an indeterminate name, polynomial, rational or RatFunc to a RatFunc."""
    if isinstance(value, RatFunc):
        return value
    if isinstance(value, Polynomial):
        return rf_from_poly(value)
    if isinstance(value, str):
        return rf_var(table, value)
    if isinstance(value, RationalLike):
        return rf_const(table, value)
    raise TypeError(f"cannot use {value!r} as a coordinate")


@dataclass(frozen=True, eq=False)
class Point:
    x: RatFunc
    y: RatFunc

    def __post_init__(self):
        if self.x.table != self.y.table:
            raise TableMismatch(f"{self.x.table.names} vs {self.y.table.names}")

    @classmethod
    def of(cls, x: Scalar, y: Scalar, table: VarTable = DEFAULT_TABLE) -> "Point":
        return cls(as_ratfunc(x, table), as_ratfunc(y, table))

    @property
    def table(self) -> VarTable:
        return self.x.table

    def __add__(self, other: "Point") -> "Point":
        if not isinstance(other, Point):
            return NotImplemented
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point") -> "Point":
        if not isinstance(other, Point):
            return NotImplemented
        return Point(self.x - other.x, self.y - other.y)

    def __neg__(self) -> "Point":
        return Point(-self.x, -self.y)

    def __mul__(self, k) -> "Point":
        if isinstance(k, Point):
            return NotImplemented
        return Point(self.x * k, self.y * k)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Point):
            return NotImplemented
        return self.x == other.x and self.y == other.y

    def __hash__(self):
        return hash((self.x, self.y))

    def evaluate(self, subst: Mapping[str, RationalLike]) -> Tuple[Fraction, Fraction]:
        return rf_eval(self.x, subst), rf_eval(self.y, subst)

    def __str__(self):
        return f"({rf_format(self.x)}, {rf_format(self.y)})"


def dot(p: Point, q: Point) -> RatFunc:
    return p.x * q.x + p.y * q.y


def cross(p: Point, q: Point) -> RatFunc:
    return p.x * q.y - p.y * q.x


def collinear_det(p1: Point, p2: Point, p3: Point) -> RatFunc:
    """Orientation determinant; twice the signed area of p1 p2 p3."""
    return cross(p2 - p1, p3 - p1)


@dataclass(frozen=True, eq=False)
class Triangle:
    v1: Point
    v2: Point
    v3: Point

    def __post_init__(self):
        if collinear_det(self.v1, self.v2, self.v3).is_zero:
            raise DegenerateConstruction(f"collinear vertices {self.v1}, {self.v2}, {self.v3}")

    @property
    def vertices(self) -> Tuple[Point, Point, Point]:
        return self.v1, self.v2, self.v3

    def vertex(self, i: int) -> Point:
        if i not in (1, 2, 3):
            raise IndexError(f"triangle vertex index must be 1, 2 or 3, got {i}")
        return self.vertices[i - 1]

    def __eq__(self, other):
        if not isinstance(other, Triangle):
            return NotImplemented
        return self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def __str__(self):
        return "[" + ", ".join(str(v) for v in self.vertices) + "]"


def triangle(p1: Point, p2: Point, p3: Point) -> Triangle:
    return Triangle(p1, p2, p3)


@dataclass(frozen=True, eq=False)
class Barycentrics:
    """Homogeneous weights (x : y : z) relative to a triangle."""

    x: RatFunc
    y: RatFunc
    z: RatFunc

    def __post_init__(self):
        if self.x.is_zero and self.y.is_zero and self.z.is_zero:
            raise ValueError("barycentric weights cannot all vanish")

    def proportional_to(self, other: "Barycentrics") -> bool:
        return (
            (self.x * other.y - self.y * other.x).is_zero
            and (self.x * other.z - self.z * other.x).is_zero
            and (self.y * other.z - self.z * other.y).is_zero
        )


def line_intersection(p: Point, d: Point, q: Point, e: Point) -> Point:
    """Meet of the lines p + s*d and q + t*e by Cramer's rule."""
    det = cross(e, d)
    if det.is_zero:
        raise DegenerateConstruction(f"parallel lines through {p} and {q}")
    s = cross(e, q - p) / det
    return p + d * s


def te(u: Scalar, v: Scalar, table: VarTable = DEFAULT_TABLE) -> Triangle:
    """Triangle (0,0), (1,0), apex with half-angle tangents u at (0,0) and v at (1,0).

    The apex is the meet of the ray from (0,0) in direction (1-u^2, 2u) and the ray from (1,0)
    in direction (-(1-v^2), 2v), the tangent double-angle directions of the two base angles.
    """
    u, v = as_ratfunc(u, table), as_ratfunc(v, table)
    origin = Point(rf_const(u.table, 0), rf_const(u.table, 0))
    unit = Point(rf_const(u.table, 1), rf_const(u.table, 0))
    left = Point(1 - u * u, 2 * u)
    right = Point(v * v - 1, 2 * v)
    if ((u + v) * (1 - u * v)).is_zero:
        raise DegenerateConstruction(f"te({rf_format(u)}, {rf_format(v)}): rays never meet")
    apex = line_intersection(origin, left, unit, right)
    return Triangle(origin, unit, apex)


def de_sq(p: Point, q: Point) -> RatFunc:
    w = p - q
    return dot(w, w)


def barycentrics(t: Triangle, p: Point) -> Barycentrics:
    return Barycentrics(
        collinear_det(p, t.v2, t.v3),
        collinear_det(t.v1, p, t.v3),
        collinear_det(t.v1, t.v2, p),
    )


def from_barycentrics(t: Triangle, b: Barycentrics) -> Point:
    total = b.x + b.y + b.z
    if total.is_zero:
        raise ConjugateAtInfinity("barycentric weights sum to zero: point at infinity")
    return Point(
        (b.x * t.v1.x + b.y * t.v2.x + b.z * t.v3.x) / total,
        (b.x * t.v1.y + b.y * t.v2.y + b.z * t.v3.y) / total,
    )


def isogonal_conjugate(t: Triangle, p: Point) -> Point:
    """Isogonal conjugate via (a^2 yz : b^2 xz : c^2 xy); only squared lengths appear."""
    b = barycentrics(t, p)
    if b.x.is_zero or b.y.is_zero or b.z.is_zero:
        raise ConjugateAtInfinity(f"{p} lies on a sideline of the reference triangle")
    a2 = de_sq(t.v2, t.v3)
    b2 = de_sq(t.v1, t.v3)
    c2 = de_sq(t.v1, t.v2)
    return from_barycentrics(t, Barycentrics(a2 * b.y * b.z, b2 * b.x * b.z, c2 * b.x * b.y))


def circumcenter(p1: Point, p2: Point, p3: Point) -> Point:
    """Solve the two perpendicular-bisector equations relative to p1."""
    u = p2 - p1
    w = p3 - p1
    det = 2 * cross(u, w)
    if det.is_zero:
        raise DegenerateConstruction(f"collinear points {p1}, {p2}, {p3} have no circumcenter")
    uu, ww = dot(u, u), dot(w, w)
    return p1 + Point((w.y * uu - u.y * ww) / det, (u.x * ww - w.x * uu) / det)


def circumradius_sq(p1: Point, p2: Point, p3: Point) -> RatFunc:
    return de_sq(circumcenter(p1, p2, p3), p1)


def reflect_over_line(p: Point, l1: Point, l2: Point) -> Point:
    d = l2 - l1
    dd = dot(d, d)
    if dd.is_zero:
        raise DegenerateConstruction(f"{l1} and {l2} do not span a line")
    foot = l1 + d * (dot(p - l1, d) / dd)
    return foot * 2 - p


def concyclic_det(p1: Point, p2: Point, p3: Point, p4: Point) -> RatFunc:
    """The determinant with rows [x, y, x^2 + y^2, 1]; zero iff the points share a circle or line.

    Translating p1 to the origin leaves the determinant unchanged and clears the last column.
    """
    rows = []
    for p in (p2, p3, p4):
        w = p - p1
        rows.append((w.x, w.y, dot(w, w)))
    (a, b, c), (d, e, f), (g, h, i) = rows
    return -(a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g))
