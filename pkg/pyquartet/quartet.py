"""Symbolic verification of the quartet theorem and its certificate."""
from dataclasses import dataclass, field
from datetime import timedelta
import logging
import time
from typing import List, Optional, Tuple

from pyquartet import golden
from pyquartet.geometry import Point, circumradius_sq, de_sq, reflect_over_line
from pyquartet.oracle import numeric_spotcheck
from pyquartet.ratfield import RatFunc, rf_const, rf_eq, rf_eval, rf_format, rf_var
from pyquartet.scene import QuadrilateralScene, claims, mirror_pairs

logger = logging.getLogger(__name__)

Check = Tuple[str, bool]

CERTIFICATE_HEADER = "LEVERSHA-CERTIFICATE v1"


@dataclass
class VerificationReport:
    proof_equalities: List[Check]
    radius_sq: RatFunc
    bstar_formula: Point
    cstar_formula: Point
    mirror_pairs: List[Check] = field(default_factory=list)
    # one-line proof, radius, closed forms and the optional numeric pass
    checks: List[Check] = field(default_factory=list)
    elapsed: timedelta = timedelta(0)

    @property
    def all_checks(self) -> List[Check]:
        return self.checks[:1] + self.proof_equalities + self.checks[1:] + self.mirror_pairs

    @property
    def passed(self) -> bool:
        return all(passed for _, passed in self.all_checks)


def replay_one_line_proof(scene: QuadrilateralScene) -> bool:
    """B* and C* are equidistant from A."""
    return rf_eq(de_sq(scene.Bstar, scene.A), de_sq(scene.Cstar, scene.A))


def quartet_equalities(scene: QuadrilateralScene) -> List[Check]:
    checks = []
    for claim in claims:
        center = scene.point(claim.center)
        for first, second in claim.equalities:
            started = time.perf_counter()
            passed = rf_eq(de_sq(center, scene.point(first)), de_sq(center, scene.point(second)))
            logger.debug("%s decided in %.2fs", claim.label(first, second),
                         time.perf_counter() - started)
            checks.append((claim.label(first, second), passed))
    return checks


def verify_quartet(scene: QuadrilateralScene) -> VerificationReport:
    """Each vertex is the circumcenter of the other three conjugates: eight field equalities."""
    started = time.perf_counter()
    report = VerificationReport(
        proof_equalities=quartet_equalities(scene),
        radius_sq=circumradius_sq(scene.Bstar, scene.Cstar, scene.Dstar),
        bstar_formula=scene.Bstar,
        cstar_formula=scene.Cstar,
    )
    report.elapsed = timedelta(seconds=time.perf_counter() - started)
    return report


def _specialize(scene: QuadrilateralScene, f: RatFunc) -> RatFunc:
    """``f`` in m, n, M, N read in the scene's own tangents.

    Only the symbolic scene and fully numeric scenes are supported.
    """
    table = scene.params
    names = table.names[:4]
    if all(rf_eq(t, rf_var(table, name)) for t, name in zip(scene.parameters, names)):
        return f
    if all(t.is_constant for t in scene.parameters):
        subst = {name: t.constant_value for name, t in zip(names, scene.parameters)}
        return rf_const(table, rf_eval(f, subst))
    raise ValueError("closed forms apply to the symbolic scene or a numeric one")


def leversha_radius_check(scene: QuadrilateralScene, radius_sq: Optional[RatFunc] = None) -> bool:
    """Circumradius of B*C*D* squared against the square of the published radius."""
    if radius_sq is None:
        radius_sq = circumradius_sq(scene.Bstar, scene.Cstar, scene.Dstar)
    expected = _specialize(scene, golden.leversha_radius(scene.params))
    return rf_eq(radius_sq, expected * expected)


def golden_formula_check(scene: QuadrilateralScene) -> Tuple[bool, bool]:
    results = []
    for computed, closed_form in ((scene.Bstar, golden.bstar(scene.params)),
                                  (scene.Cstar, golden.cstar(scene.params))):
        results.append(rf_eq(computed.x, _specialize(scene, closed_form.x))
                       and rf_eq(computed.y, _specialize(scene, closed_form.y)))
    return results[0], results[1]


def mirror_pair_checks(scene: QuadrilateralScene, full: bool = False) -> List[Check]:
    """B*/C* across AD always; every pair across its opposite line with ``full``."""
    checks = []
    for pair in mirror_pairs if full else mirror_pairs[:1]:
        first, second = scene.point(pair.first), scene.point(pair.second)
        l1, l2 = (scene.point(name) for name in pair.line)
        checks.append((pair.label, reflect_over_line(first, l1, l2) == second))
    return checks


def mirror_check(scene: QuadrilateralScene, full: bool = False) -> bool:
    # AD is the x-axis, so the mirror image of B* just negates y
    coordinates = (rf_eq(scene.Bstar.x, scene.Cstar.x)
                   and rf_eq(scene.Bstar.y, -scene.Cstar.y))
    return coordinates and all(passed for _, passed in mirror_pair_checks(scene, full))


def certify(scene: QuadrilateralScene, trials: int = 0, seed: int = 0,
            bound: int = 2 ** 16, full_mirror: bool = False) -> VerificationReport:
    """Run every symbolic check, plus ``trials`` numeric spot checks when positive."""
    started = time.perf_counter()
    report = verify_quartet(scene)
    bstar_ok, cstar_ok = golden_formula_check(scene)
    report.checks = [
        ("one-line proof", replay_one_line_proof(scene)),
        ("radius formula", leversha_radius_check(scene, report.radius_sq)),
        ("closed form B*", bstar_ok),
        ("closed form C*", cstar_ok),
    ]
    report.mirror_pairs = mirror_pair_checks(scene, full_mirror)
    if trials > 0:
        report.checks.append((f"numeric spot check x{trials}",
                              numeric_spotcheck(scene, trials, seed, bound)))
    for label, passed in report.all_checks:
        if not passed:
            logger.warning("check failed: %s", label)
    report.elapsed = timedelta(seconds=time.perf_counter() - started)
    return report


def format_certificate(report: VerificationReport, elapsed: bool = True) -> str:
    lines = [CERTIFICATE_HEADER]
    lines += [f"{label}: {'PASS' if passed else 'FAIL'}" for label, passed in report.all_checks]
    lines += [
        f"RADIUS_SQ = {rf_format(report.radius_sq)}",
        f"BSTAR = {report.bstar_formula}",
        f"CSTAR = {report.cstar_formula}",
    ]
    if elapsed:
        lines.append(f"ELAPSED_MS = {int(report.elapsed.total_seconds() * 1000)}")
    return "\n".join(lines)
