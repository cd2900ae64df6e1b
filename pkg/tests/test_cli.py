from pathlib import Path

import pytest

from pyquartet.cli import build_parser, main
from pyquartet.config import get_settings
from pyquartet.multipoly import DEFAULT_TABLE
from pyquartet.ratfield import rf_format, rf_var

SCRIPTS = Path(__file__).parents[1] / "scripts"


@pytest.fixture(autouse=True)
def clean_settings(monkeypatch, tmp_path):
    # no .env from the working directory, no QUARTET_* from the shell
    monkeypatch.chdir(tmp_path)
    for name in ("QUARTET_SEED", "QUARTET_TRIALS", "QUARTET_BOUND", "QUARTET_LOG_LEVEL"):
        monkeypatch.delenv(name, raising=False)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


def test_parser():
    args = build_parser().parse_args(["--trials", "3", "eval", "-e", "m"])
    assert (args.command, args.trials, args.expr, args.vars) == ("eval", 3, "m", "m,n,M,N")
    args = build_parser().parse_args(["leversha", "--full-mirror"])
    assert args.full_mirror


def test_eval(capsys):
    assert main(["eval", "-e", "deSq(point(0,0),point(1,0))"]) == 0
    assert capsys.readouterr().out == "1\n"
    assert main(["eval", "--expr", "(m*m - n*n)/(m + n)"]) == 0
    assert capsys.readouterr().out == "m - n\n"


def test_eval_with_substitution(capsys):
    assert main(["eval", "-e", "m^2 + 1", "--subst", "m=1/3"]) == 0
    assert capsys.readouterr().out == "10/9\n"
    assert main(["eval", "-e", "point(m, 1/2)", "--subst", "m=2"]) == 0
    assert capsys.readouterr().out == "(2, 1/2)\n"


def test_eval_with_own_indeterminates(capsys):
    assert main(["eval", "-e", "x*y - y*x", "--vars", "x,y"]) == 0
    assert capsys.readouterr().out == "0\n"


def test_malformed_expression_is_a_usage_error(capsys):
    assert main(["eval", "-e", "m +"]) == 2
    assert capsys.readouterr().err.startswith("error: 1:4: expected an expression")
    assert main(["eval", "-e", "m $ n"]) == 2


def test_eval_reads_back_canonical_forms(capsys):
    m, n, big_m = (rf_var(DEFAULT_TABLE, name) for name in ("m", "n", "M"))
    value = (3 * m * n - 1) / (2 * big_m * big_m + n)
    assert main(["eval", "-e", rf_format(value)]) == 0
    assert capsys.readouterr().out == rf_format(value) + "\n"


def test_eval_errors(capsys):
    assert main(["eval", "-e", "1/(m - m)"]) == 1
    assert capsys.readouterr().err.startswith("error: ")
    assert main(["eval", "-e", "m", "--subst", "n=1"]) == 1
    assert main(["eval", "-e", "m", "--subst", "m"]) == 1


def test_run_leversha_script(capsys):
    assert main(["run", str(SCRIPTS / "leversha.rg")]) == 0
    assert capsys.readouterr().out == "ASSERT line 8: PASS\n"


def test_run_reports_failed_asserts(tmp_path, capsys):
    script = tmp_path / "false.rg"
    script.write_text("show 1/2;\nassert 1 == 2;\n")
    assert main(["run", str(script)]) == 1
    captured = capsys.readouterr()
    assert captured.out == "(1)/(2)\nASSERT line 2: FAIL\n"
    assert f"{script}:2: assertion failed" in captured.err.splitlines()


def test_run_reports_script_errors(tmp_path, capsys):
    script = tmp_path / "unbound.rg"
    script.write_text("show x;\n")
    assert main(["run", str(script)]) == 1
    assert capsys.readouterr().err == f"{script}:1:6: unbound name 'x'\n"
    script.write_text("show 1 +;\n")
    assert main(["run", str(script)]) == 1
    assert capsys.readouterr().err.startswith(f"{script}:1:9: expected an expression")


def test_run_missing_file(tmp_path, capsys):
    assert main(["run", str(tmp_path / "missing.rg")]) == 2
    assert capsys.readouterr().err.startswith("error: ")


def test_usage_errors(capsys):
    assert main(["bogus"]) == 2
    assert main([]) == 2
    assert main(["eval"]) == 2
    assert main(["--trials", "-1", "eval", "-e", "m"]) == 2
    assert main(["--log-level", "chatty", "eval", "-e", "m"]) == 2


def test_bad_environment(monkeypatch, capsys):
    monkeypatch.setenv("QUARTET_TRIALS", "many")
    assert main(["eval", "-e", "m"]) == 2
    assert "QUARTET_TRIALS" in capsys.readouterr().err


@pytest.mark.slow
def test_leversha(capsys):
    assert main(["--trials", "1", "--seed", "5", "leversha"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "LEVERSHA-CERTIFICATE v1"
    assert "numeric spot check x1: PASS" in lines
    assert not any(line.endswith(": FAIL") for line in lines)
