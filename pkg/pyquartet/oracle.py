"""Independent numeric oracles for the quartet scene.

The exact oracle rebuilds every point from the four half-angle tangents with plain Fractions:
apexes by the law of sines, isogonal lines by complex-number angle reflection, circumcenters
by a 2x2 solve. The float oracle does the same construction in double precision with numpy.
Neither touches the symbolic code paths.
"""
import logging
import random
from fractions import Fraction
from typing import Dict, List, Mapping, Sequence, Tuple

import numpy as np

from pyquartet.errors import PoleAtPoint
from pyquartet.ratfield import MAX_RESAMPLES, random_point, rf_eval
from pyquartet.scene import QuadrilateralScene, claims, conjugates, display_name, mirror_pairs

logger = logging.getLogger(__name__)

Pair = Tuple[Fraction, Fraction]
Check = Tuple[str, bool]


class DegenerateTuple(ArithmeticError):
    """The sampled tangents put the configuration on a degeneracy locus."""


def _sub(p: Pair, q: Pair) -> Pair:
    return p[0] - q[0], p[1] - q[1]


def _dot(p: Pair, q: Pair) -> Fraction:
    return p[0] * q[0] + p[1] * q[1]


def _cross(p: Pair, q: Pair) -> Fraction:
    return p[0] * q[1] - p[1] * q[0]


def _cmul(p: Pair, q: Pair) -> Pair:
    return p[0] * q[0] - p[1] * q[1], p[0] * q[1] + p[1] * q[0]


def _conj(p: Pair) -> Pair:
    return p[0], -p[1]


def _dist_sq(p: Pair, q: Pair) -> Fraction:
    w = _sub(p, q)
    return _dot(w, w)


def _meet(p: Pair, d: Pair, q: Pair, e: Pair) -> Pair:
    # p + s*d = q + t*e
    det = d[1] * e[0] - d[0] * e[1]
    if det == 0:
        raise DegenerateTuple("parallel lines")
    w = _sub(q, p)
    s = (w[1] * e[0] - w[0] * e[1]) / det
    return p[0] + s * d[0], p[1] + s * d[1]


def _cos_sin(t: Fraction) -> Pair:
    return (1 - t * t) / (1 + t * t), 2 * t / (1 + t * t)


def apex(u: Fraction, v: Fraction) -> Pair:
    """Apex over the unit base by the law of sines: |A apex| = sin(angle at D) / sin(angle sum)."""
    cos_a, sin_a = _cos_sin(u)
    cos_d, sin_d = _cos_sin(v)
    sin_sum = sin_a * cos_d + cos_a * sin_d
    if sin_sum == 0:
        raise DegenerateTuple(f"apex of ({u}, {v}) at infinity")
    r = sin_d / sin_sum
    return r * cos_a, r * sin_a


def isogonal_point(x: Pair, y: Pair, z: Pair, p: Pair) -> Pair:
    """Meet of the reflections of XP and YP in the angle bisectors at X and Y.

    As complex numbers, the reflection of direction ``p`` in the bisector of directions ``u`` and
    ``w`` is ``u * w * conj(p)``.
    """
    for a, b in ((x, y), (y, z), (z, x)):
        if _cross(_sub(b, a), _sub(p, a)) == 0:
            raise DegenerateTuple("point on a sideline")
    at_x = _cmul(_cmul(_sub(y, x), _sub(z, x)), _conj(_sub(p, x)))
    at_y = _cmul(_cmul(_sub(x, y), _sub(z, y)), _conj(_sub(p, y)))
    return _meet(x, at_x, y, at_y)


def circumcenter_point(p1: Pair, p2: Pair, p3: Pair) -> Pair:
    """Solve 2 (Pi - P1) . O = |Pi|^2 - |P1|^2 for i = 2, 3."""
    a1, b1 = 2 * (p2[0] - p1[0]), 2 * (p2[1] - p1[1])
    a2, b2 = 2 * (p3[0] - p1[0]), 2 * (p3[1] - p1[1])
    c1 = _dot(p2, p2) - _dot(p1, p1)
    c2 = _dot(p3, p3) - _dot(p1, p1)
    det = a1 * b2 - a2 * b1
    if det == 0:
        raise DegenerateTuple("collinear points")
    return (c1 * b2 - c2 * b1) / det, (a1 * c2 - a2 * c1) / det


def reflect_point(p: Pair, l1: Pair, l2: Pair) -> Pair:
    d = _sub(l2, l1)
    t = _dot(_sub(p, l1), d) / _dot(d, d)
    return 2 * (l1[0] + t * d[0]) - p[0], 2 * (l1[1] + t * d[1]) - p[1]


def leversha_radius_value(m: Fraction, n: Fraction, big_m: Fraction, big_n: Fraction) -> Fraction:
    """The published radius expression, evaluated directly."""
    opposite_arc = (big_m * big_n - 1) * (m * n - 1) + (big_m + big_n) * (n + m)
    same_arc = (big_m * big_n * (n + m) - m * n * (big_m + big_n)
                + big_m + big_n - m - n)
    if opposite_arc * same_arc == 0:
        raise DegenerateTuple("cyclic quadrilateral")
    return ((big_n - n) * (big_n * n + 1) * (m * m + 1) * (big_m * big_m + 1)
            / (opposite_arc * same_arc))


def rebuild_scene(u: Fraction, v: Fraction, big_u: Fraction, big_v: Fraction) -> Dict[str, Pair]:
    points = {
        "A": (Fraction(0), Fraction(0)),
        "D": (Fraction(1), Fraction(0)),
        "B": apex(u, v),
        "C": apex(big_u, big_v),
    }
    for conjugate in conjugates:
        x, y, z = (points[name] for name in conjugate.reference)
        points[conjugate.name] = isogonal_point(x, y, z, points[conjugate.point])
    return points


def theorem_checks(points: Mapping[str, Pair], tangents: Sequence[Fraction]) -> List[Check]:
    """Every quartet claim, decided on already-constructed exact points."""
    checks = []
    for claim in claims:
        center = points[claim.center]
        for first, second in claim.equalities:
            checks.append((claim.label(first, second),
                           _dist_sq(center, points[first]) == _dist_sq(center, points[second])))
    o = circumcenter_point(points["Bstar"], points["Cstar"], points["Dstar"])
    checks.append(("radius formula",
                   _dist_sq(o, points["Bstar"]) == leversha_radius_value(*tangents) ** 2))
    for pair in mirror_pairs:
        l1, l2 = (points[name] for name in pair.line)
        checks.append((pair.label, reflect_point(points[pair.first], l1, l2) == points[pair.second]))
    return checks


def _sample(scene: QuadrilateralScene, rng: random.Random, bound: int):
    for _ in range(MAX_RESAMPLES):
        subst = random_point(rng, scene.params.names, bound)
        try:
            tangents = [rf_eval(t, subst) for t in scene.parameters]
            rebuilt = rebuild_scene(*tangents)
            evaluated = {name: p.evaluate(subst) for name, p in scene.points.items()}
            checks = theorem_checks(rebuilt, tangents)
        except (PoleAtPoint, DegenerateTuple) as e:
            logger.debug("resampling at %s: %s", subst, e)
            continue
        return subst, rebuilt, evaluated, checks
    raise PoleAtPoint(f"no non-degenerate tuple found in {MAX_RESAMPLES} draws")


def numeric_spotcheck(scene: QuadrilateralScene, trials: int, seed: int,
                      bound: int = 2 ** 16) -> bool:
    """Compare the scene with an exact rebuild at random tuples and re-decide every claim there."""
    if trials < 1:
        raise ValueError("numeric_spotcheck needs at least one trial")
    rng = random.Random(seed)
    ok = True
    for trial in range(trials):
        subst, rebuilt, evaluated, checks = _sample(scene, rng, bound)
        for name, expected in rebuilt.items():
            if evaluated[name] != expected:
                logger.warning("trial %d at %s: %s is %s, rebuilt %s",
                               trial, subst, display_name(name), evaluated[name], expected)
                ok = False
        for label, passed in checks:
            if not passed:
                logger.warning("trial %d at %s: %s fails", trial, subst, label)
                ok = False
    return ok


# double precision


def _unit(v: np.ndarray) -> np.ndarray:
    return v / np.linalg.norm(v)


def _float_meet(p: np.ndarray, d: np.ndarray, q: np.ndarray, e: np.ndarray) -> np.ndarray:
    s, _ = np.linalg.solve(np.column_stack([d, -e]), q - p)
    return p + s * d


def _float_isogonal(x: np.ndarray, y: np.ndarray, z: np.ndarray, p: np.ndarray) -> np.ndarray:
    def reflected_cevian(vertex, left, right):
        bisector = _unit(_unit(left - vertex) + _unit(right - vertex))
        cevian = p - vertex
        return 2 * np.dot(cevian, bisector) * bisector - cevian

    return _float_meet(x, reflected_cevian(x, y, z), y, reflected_cevian(y, x, z))


def float_scene(m: float, n: float, big_m: float, big_n: float) -> Dict[str, np.ndarray]:
    """Double-precision scene from the angles 2*atan(t), with cevians reflected in bisectors."""
    a, d = np.array([0.0, 0.0]), np.array([1.0, 0.0])

    def apex_of(u, v):
        theta, phi = 2 * np.arctan(u), 2 * np.arctan(v)
        return _float_meet(a, np.array([np.cos(theta), np.sin(theta)]),
                           d, np.array([-np.cos(phi), np.sin(phi)]))

    points = {"A": a, "D": d, "B": apex_of(m, n), "C": apex_of(big_m, big_n)}
    for conjugate in conjugates:
        x, y, z = (points[name] for name in conjugate.reference)
        points[conjugate.name] = _float_isogonal(x, y, z, points[conjugate.point])
    return points


def float_circumradius(p1: np.ndarray, p2: np.ndarray, p3: np.ndarray) -> float:
    lhs = 2 * np.vstack([p2 - p1, p3 - p1])
    rhs = np.array([p2 @ p2 - p1 @ p1, p3 @ p3 - p1 @ p1])
    center = np.linalg.solve(lhs, rhs)
    return float(np.linalg.norm(center - p1))
