import io
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pyquartet.errors import (
    DegenerateConstruction,
    DivisionByZero,
    ScriptEvalError,
    ScriptNameError,
    ScriptTypeError,
    ZeroDenominator,
)
from pyquartet.geometry import Point
from pyquartet.interpreter import (
    ReportLine,
    evaluate_expression,
    format_value,
    kind_of,
    run_source,
)
from pyquartet.multipoly import DEFAULT_TABLE
from pyquartet.ratfield import rf_format, rf_var

SCRIPTS = Path(__file__).parents[1] / "scripts"

m, n, M, N = (rf_var(DEFAULT_TABLE, name) for name in DEFAULT_TABLE.names)

factors = st.sampled_from([m, n, M, N, m + 1, n - M, m * N - 2, 3 * m * m + n, M * N + m])
coefficients = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@st.composite
def ratfuncs(draw):
    num = draw(coefficients) * draw(factors) * draw(factors) + draw(coefficients) * draw(factors)
    den = draw(factors) * draw(factors) + draw(st.integers(min_value=1, max_value=7))
    return num / den


def shown(source):
    return [str(line) for line in run_source(source).lines]


def test_show():
    assert shown("vars m; show m + m;") == ["2*m"]
    assert shown("show 1/2 + 1/3;") == ["(5)/(6)"]
    assert shown("vars m, n; show (m*m - n*n) / (m - n);") == ["m + n"]


def test_assert_pass_and_fail():
    report = run_source("assert deSq(point(0,0), point(1,0)) == 1;\nassert 1 == 2;")
    assert [str(line) for line in report.lines] == ["ASSERT line 1: PASS", "ASSERT line 2: FAIL"]
    assert not report.passed
    assert [line.line for line in report.failures] == [2]


def test_not_equal():
    assert shown("vars m; assert m != m + 1; assert m != m;") == [
        "ASSERT line 1: PASS", "ASSERT line 1: FAIL",
    ]


def test_leversha_script():
    report = run_source((SCRIPTS / "leversha.rg").read_text())
    assert [str(line) for line in report.lines] == ["ASSERT line 8: PASS"]
    assert report.passed


def test_powers():
    assert shown("vars m; show m^0; show m^-1; show (m + 1)^2;") == [
        "1", "(1)/(m)", "m^2 + 2*m + 1",
    ]
    with pytest.raises(ScriptTypeError) as info:
        run_source("vars m; show m^(1/2);")
    assert (info.value.line, info.value.col) == (1, 17)
    with pytest.raises(ScriptTypeError):
        run_source("vars m; show m^m;")
    with pytest.raises(ScriptTypeError):
        run_source("show point(0, 0)^2;")


def test_unbound_name():
    with pytest.raises(ScriptNameError) as info:
        run_source("show x;")
    assert (info.value.line, info.value.col) == (1, 6)


def test_indeterminates_must_be_declared():
    with pytest.raises(ScriptNameError):
        run_source("show m;")
    assert shown("vars m; show m;") == ["m"]


def test_cannot_assign_to_indeterminate():
    with pytest.raises(ScriptNameError) as info:
        run_source("vars m; m = 1;")
    assert (info.value.line, info.value.col) == (1, 9)


def test_vars_rules():
    with pytest.raises(ScriptNameError) as info:
        run_source("x = 1; vars m;")
    assert (info.value.line, info.value.col) == (1, 8)
    with pytest.raises(ScriptNameError):
        run_source("vars m, m;")
    with pytest.raises(ScriptNameError):
        run_source("vars m; vars n;")
    # repeating the same declaration is harmless
    assert shown("vars m; vars m; show m;") == ["m"]


def test_predeclared_table():
    report = run_source("show M - m;", table=DEFAULT_TABLE)
    assert str(report) == "-m + M"
    with pytest.raises(ScriptNameError):
        run_source("vars x;", table=DEFAULT_TABLE)


def test_type_errors():
    with pytest.raises(ScriptTypeError) as info:
        run_source("assert point(0, 0) == 1;")
    assert (info.value.line, info.value.col) == (1, 1)
    with pytest.raises(ScriptTypeError) as info:
        run_source("show deSq(1, 2);")
    assert (info.value.line, info.value.col) == (1, 6)
    assert "deSq(point, point)" in info.value.message
    with pytest.raises(ScriptTypeError):
        run_source("show deSq(point(0, 0));")
    with pytest.raises(ScriptTypeError):
        run_source("show (1, point(0, 0));")
    with pytest.raises(ScriptTypeError):
        run_source("show point(0, 0) * point(1, 1);")
    with pytest.raises(ScriptTypeError):
        run_source("show -Te(1/2, 1/2);")


def test_unknown_function():
    with pytest.raises(ScriptNameError) as info:
        run_source("show foo(1);")
    assert (info.value.line, info.value.col) == (1, 6)


def test_zero_denominator_literal():
    with pytest.raises(ScriptEvalError) as info:
        run_source("show 1/0;")
    assert isinstance(info.value.cause, ZeroDenominator)
    assert (info.value.line, info.value.col) == (1, 6)


def test_division_by_zero():
    with pytest.raises(ScriptEvalError) as info:
        run_source("vars m; show 1/(m-m);")
    assert isinstance(info.value.cause, DivisionByZero)
    assert (info.value.line, info.value.col) == (1, 15)


def test_degenerate_constructions():
    with pytest.raises(ScriptEvalError) as info:
        run_source("show Te(1/2, -1/2);")
    assert isinstance(info.value.cause, DegenerateConstruction)
    assert (info.value.line, info.value.col) == (1, 6)
    with pytest.raises(ScriptEvalError):
        run_source("show triangle(point(0,0), point(1,1), point(2,2));")


def test_vertex_index():
    assert shown("T = Te(1/2, 1/2); show vertex(T, 3);") == ["((1)/(2), (2)/(3))"]
    with pytest.raises(ScriptTypeError) as info:
        run_source("T = Te(1/2, 1/2); show vertex(T, 4);")
    assert (info.value.line, info.value.col) == (1, 24)
    with pytest.raises(ScriptTypeError):
        run_source("vars m; T = Te(1/2, 1/2); show vertex(T, m);")


def test_point_arithmetic():
    assert shown("show 2 * (1, 2) - (1, 1);") == ["(1, 3)"]
    assert shown("show (1, 2) / 2 + point(0, 1) * 3;") == ["((1)/(2), 4)"]
    assert shown("show -(1, 2);") == ["(-1, -2)"]


def test_builtins():
    source = """
    A = point(0, 0); B = point(4, 0); C = point(0, 2);
    show circumcenter(A, B, C);
    show circumradiusSq(A, B, C);
    show reflect(point(1, 2), A, B);
    show collinearDet(A, B, C);
    show concyclicDet(A, B, C, point(4, 2));
    show xcoord(C) + ycoord(C);
    assert isogonal(triangle(A, point(4, 0), point(0, 3)), point(1, 1)) == point(1, 1);
    assert isogonal(A, point(4, 0), point(0, 3), point(1, 1)) == (1, 1);
    show Te(1/2, 1/2);
    """
    assert shown(source) == [
        "(2, 1)", "5", "(1, -2)", "8", "0", "2",
        "ASSERT line 9: PASS", "ASSERT line 10: PASS",
        "[(0, 0), (1, 0), ((1)/(2), (2)/(3))]",
    ]


def test_out_receives_each_line():
    out = io.StringIO()
    report = run_source("show 1; assert 1 == 1;", out=out)
    assert out.getvalue() == "1\nASSERT line 1: PASS\n"
    assert len(report.lines) == 2


def test_runs_are_deterministic():
    source = "vars m, n; T = Te(m, n); show vertex(T, 3); show deSq(vertex(T, 1), vertex(T, 3));"
    assert shown(source) == shown(source)


def test_report_line():
    assert str(ReportLine("assert", 3, "", False)) == "ASSERT line 3: FAIL"
    assert str(ReportLine("show", 3, "m")) == "m"


def test_kinds_and_formatting():
    assert kind_of(m) == "number"
    assert kind_of(Point(m, n)) == "point"
    with pytest.raises(TypeError):
        kind_of(Fraction(1))
    assert format_value(m / 2) == "(m)/(2)"


def test_evaluate_expression():
    assert evaluate_expression("deSq(point(0, 0), point(m, 0))") == m * m
    assert evaluate_expression("xcoord(vertex(Te(1/2, 1/2), 3))") == Fraction(1, 2)


@pytest.mark.parametrize(
    "value",
    [m, m / 2, (m * m - n) / (2 * n + 1), (3 * m * n - 1) / (M * M), -m + Fraction(1, 2), m - m],
)
def test_canonical_strings_evaluate_back(value):
    assert evaluate_expression(rf_format(value)) == value


@given(value=ratfuncs())
@settings(max_examples=100, derandomize=True, deadline=None)
def test_random_canonical_strings_evaluate_back(value):
    text = rf_format(value)
    assert evaluate_expression(text) == value
    assert rf_format(evaluate_expression(text)) == text
