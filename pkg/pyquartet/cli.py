import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from pyquartet.config import get_settings
from pyquartet.errors import LexError, ParseError, QuartetError, ScriptError
from pyquartet.geometry import Point, Triangle
from pyquartet.interpreter import evaluate_expression, format_value, run_source
from pyquartet.multipoly import DEFAULT_TABLE, VarTable
from pyquartet.quartet import certify, format_certificate
from pyquartet.ratfield import rf_eval
from pyquartet.scalar import rat_format
from pyquartet.scene import build_scene
from pyquartet.utils import parse_substitution

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pyquartet",
        description="Exact symbolic verification of the quartet of isogonal conjugates",
    )
    parser.add_argument("--trials", type=int, help="numeric spot-check trials after leversha")
    parser.add_argument("--seed", type=int, help="seed for the numeric spot check")
    parser.add_argument("--log-level", help="logging level, e.g. DEBUG or INFO")
    subparsers = parser.add_subparsers(dest="command", required=True)

    run = subparsers.add_parser("run", help="execute a construction script")
    run.add_argument("file", help="script file (.rg)")

    leversha = subparsers.add_parser("leversha", help="verify the theorem and print a certificate")
    leversha.add_argument("--full-mirror", action="store_true",
                          help="check all six mirror pairs symbolically")

    evaluate = subparsers.add_parser("eval", help="print the canonical form of one expression")
    evaluate.add_argument("-e", "--expr", required=True, help="expression to evaluate")
    evaluate.add_argument("--subst", help="evaluate numerically at e.g. m=1/3,n=1/4")
    evaluate.add_argument("--vars", default=",".join(DEFAULT_TABLE.names),
                          help="comma-separated indeterminates in scope (default: m,n,M,N)")
    return parser


def _run(args) -> int:
    source = Path(args.file).read_text(encoding="utf-8")
    try:
        report = run_source(source, out=sys.stdout)
    except ScriptError as e:
        print(f"{args.file}:{e}", file=sys.stderr)
        return EXIT_FAILED
    for failure in report.failures:
        print(f"{args.file}:{failure.line}: assertion failed", file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_FAILED


def _leversha(args, trials: int, seed: int, bound: int) -> int:
    logger.info("certifying the symbolic scene, %d spot-check trials, seed %d", trials, seed)
    scene = build_scene()
    report = certify(scene, trials=trials, seed=seed, bound=bound, full_mirror=args.full_mirror)
    print(format_certificate(report))
    return EXIT_OK if report.passed else EXIT_FAILED


def _evaluate_at(value, subst) -> str:
    if isinstance(value, Point):
        x, y = value.evaluate(subst)
        return f"({rat_format(x)}, {rat_format(y)})"
    if isinstance(value, Triangle):
        return "[" + ", ".join(_evaluate_at(v, subst) for v in value.vertices) + "]"
    return rat_format(rf_eval(value, subst))


def _eval(args) -> int:
    names = tuple(name.strip() for name in args.vars.split(",") if name.strip())
    value = evaluate_expression(args.expr, VarTable(names))
    if args.subst is None:
        print(format_value(value))
    else:
        print(_evaluate_at(value, parse_substitution(args.subst)))
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    try:
        settings = get_settings()
    except QuartetError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    level = (args.log_level or settings.log_level).upper()
    if not isinstance(logging.getLevelName(level), int):
        print(f"error: unknown log level {level!r}", file=sys.stderr)
        return EXIT_USAGE
    logging.basicConfig(level=level, format="%(asctime)s %(levelname)s %(name)s: %(message)s")
    trials = settings.trials if args.trials is None else args.trials
    seed = settings.seed if args.seed is None else args.seed
    if trials < 0:
        parser.print_usage(sys.stderr)
        print("error: --trials must be non-negative", file=sys.stderr)
        return EXIT_USAGE

    try:
        if args.command == "run":
            return _run(args)
        if args.command == "leversha":
            return _leversha(args, trials, seed, settings.bound)
        return _eval(args)
    except (FileNotFoundError, LexError, ParseError) as e:
        # a missing script or an unreadable -e expression is a usage error
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (QuartetError, OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
