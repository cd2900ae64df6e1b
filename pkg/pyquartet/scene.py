"""The quartet configuration: quadrilateral ABCD with A = (0, 0), D = (1, 0), B the apex of
te(m, n), C the apex of te(M, N), and the four isogonal conjugates A*, B*, C*, D*."""
from dataclasses import dataclass, field
import logging
from typing import Dict, List, Optional, Sequence, Tuple

from pyquartet.geometry import Point, Scalar, Triangle, as_ratfunc, isogonal_conjugate, te
from pyquartet.multipoly import DEFAULT_TABLE, VarTable
from pyquartet.ratfield import RatFunc, rf_const
from pyquartet.utils import add_derived_points, generate_scene_graph

logger = logging.getLogger(__name__)

BASE_POINTS = ["A", "B", "C", "D"]
STARRED_POINTS = ["Astar", "Bstar", "Cstar", "Dstar"]
POINT_NAMES = BASE_POINTS + STARRED_POINTS


def display_name(name: str) -> str:
    return name.replace("star", "*")


@dataclass(frozen=True)
class Conjugate:
    name: str
    point: str
    reference: Tuple[str, str, str]

    def create_point(self, points: Dict[str, Point]) -> Point:
        t = Triangle(*(points[vertex] for vertex in self.reference))
        return isogonal_conjugate(t, points[self.point])


a_star = Conjugate(name="Astar", point="A", reference=("B", "C", "D"))
b_star = Conjugate(name="Bstar", point="B", reference=("A", "D", "C"))
c_star = Conjugate(name="Cstar", point="C", reference=("A", "B", "D"))
d_star = Conjugate(name="Dstar", point="D", reference=("A", "B", "C"))
conjugates = [a_star, b_star, c_star, d_star]


@dataclass(frozen=True)
class CircumcenterClaim:
    center: str
    on_circle: Tuple[str, str, str]

    @property
    def equalities(self) -> List[Tuple[str, str]]:
        """The two distance equalities that make ``center`` equidistant from all three."""
        p, q, r = self.on_circle
        return [(p, q), (q, r)]

    def label(self, first: str, second: str) -> str:
        return (f"|{self.center}{display_name(first)}| = "
                f"|{self.center}{display_name(second)}|")


# each vertex is the circumcenter of the other three conjugates
claims = [
    CircumcenterClaim(center="A", on_circle=("Bstar", "Cstar", "Dstar")),
    CircumcenterClaim(center="B", on_circle=("Astar", "Cstar", "Dstar")),
    CircumcenterClaim(center="C", on_circle=("Astar", "Bstar", "Dstar")),
    CircumcenterClaim(center="D", on_circle=("Astar", "Bstar", "Cstar")),
]


@dataclass(frozen=True)
class MirrorPair:
    first: str
    second: str
    line: Tuple[str, str]

    @property
    def label(self) -> str:
        return (f"mirror {display_name(self.first)},{display_name(self.second)} "
                f"across {''.join(self.line)}")


# P* and Q* are mirror images across the line through the two remaining vertices
mirror_pairs = [
    MirrorPair(first="Bstar", second="Cstar", line=("A", "D")),
    MirrorPair(first="Astar", second="Dstar", line=("B", "C")),
    MirrorPair(first="Astar", second="Bstar", line=("C", "D")),
    MirrorPair(first="Cstar", second="Dstar", line=("A", "B")),
    MirrorPair(first="Astar", second="Cstar", line=("B", "D")),
    MirrorPair(first="Bstar", second="Dstar", line=("A", "C")),
]


@dataclass(frozen=True)
class QuadrilateralScene:
    params: VarTable
    A: Point
    B: Point
    C: Point
    D: Point
    Astar: Point
    Bstar: Point
    Cstar: Point
    Dstar: Point
    # the half-angle tangents (u, v, U, V) the scene was built from
    parameters: Tuple[RatFunc, RatFunc, RatFunc, RatFunc] = field(default=None, compare=False)

    def point(self, name: str) -> Point:
        if name not in POINT_NAMES:
            raise KeyError(f"no point named {name!r} in the scene")
        return getattr(self, name)

    @property
    def points(self) -> Dict[str, Point]:
        return {name: self.point(name) for name in POINT_NAMES}


def build_scene(
    params: Optional[Sequence[Scalar]] = None,
    table: VarTable = DEFAULT_TABLE,
    swap: bool = False,
) -> QuadrilateralScene:
    """Build the scene from half-angle tangents (u, v, U, V); symbolic m, n, M, N by default.

    ``swap`` exchanges the roles of (u, v) and (U, V).
    """
    if params is None:
        params = table.names[:4]
    if len(params) != 4:
        raise ValueError(f"the scene needs four half-angle tangents, got {len(params)}")
    u, v, big_u, big_v = (as_ratfunc(p, table) for p in params)
    if swap:
        u, v, big_u, big_v = big_u, big_v, u, v

    zero, one = rf_const(table, 0), rf_const(table, 1)
    points = {
        "A": Point(zero, zero),
        "D": Point(one, zero),
        "B": te(u, v).v3,
        "C": te(big_u, big_v).v3,
    }
    g = generate_scene_graph(BASE_POINTS, conjugates)
    add_derived_points(g, points, conjugates)
    logger.info("built scene over %s", ", ".join(table.names))
    return QuadrilateralScene(params=table, parameters=(u, v, big_u, big_v), **points)
