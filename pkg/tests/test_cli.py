import json
import subprocess
import sys

import pytest

from horadam_gf.cli import main
from horadam_gf.polyring import Polynomial, parse_poly


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_gf_fibonacci(capsys):
    code, out, _ = run(capsys, "gf", "--preset", "fibonacci", "--k", "1")
    assert code == 0
    assert out.splitlines()[-1] == "H_1(x) = x / (1 - x - x^2)"


def test_gf_explicit_params(capsys):
    code, out, _ = run(capsys, "gf", "--a", "0", "--b", "1", "--p", "2", "--q", "1", "--k", "1")
    assert code == 0
    assert "x / (1 - 2*x - x^2)" in out


def test_gf_symbolic(capsys):
    code, out, _ = run(capsys, "gf", "--symbolic", "--k", "1")
    assert code == 0
    assert out.splitlines()[-1] == "H_1(x) = (a + b*x - a*p*x) / (1 - p*x - q*x^2)"


def test_gf_json_roundtrip(capsys):
    code, out, _ = run(capsys, "gf", "--preset", "pell", "--k", "3", "--json")
    data = json.loads(out)
    assert code == 0 and data["k"] == 3
    num = Polynomial.from_json(data["reduced_num"])
    den = Polynomial.from_json(data["reduced_den"])
    assert num == parse_poly("x(1-4x-x^2)")
    assert den == parse_poly("(1+2x-x^2)(1-14x-x^2)")


@pytest.mark.parametrize("argv, expected", [
    (["--preset", "fibonacci", "--k", "2", "--n", "7"], "0 1 1 4 9 25 64"),
    (["--preset", "lucas", "--k", "1", "--n", "6"], "2 1 3 4 7 11"),
    (["--preset", "fibonacci", "--k", "1", "--n", "1"], "0"),
])
def test_series(capsys, argv, expected):
    code, out, _ = run(capsys, "series", *argv)
    assert code == 0
    assert out.strip() == expected


def test_series_oracle(capsys):
    code, out, _ = run(capsys, "series", "--preset", "pell", "--k", "3", "--n", "10", "--oracle")
    assert code == 0
    assert out.splitlines()[-1] == "match: yes"
    code, out, _ = run(capsys, "series", "--preset", "chebyshev-u", "--k", "2", "--n", "4",
                       "--oracle", "--json")
    data = json.loads(out)
    assert code == 0 and data["match"] is True
    assert data["coefficients"][1] == "4*t^2"


def test_series_symbolic_text(capsys):
    code, out, _ = run(capsys, "series", "--symbolic", "--k", "1", "--n", "3")
    assert code == 0
    assert out.splitlines() == ["a", "b", "a*q + b*p"]


@pytest.mark.parametrize("argv, expected", [
    (["--preset", "fibonacci", "--k", "4", "--x", "1/100"], "31986700/3161716833"),
    (["--preset", "fibonacci", "--k", "1", "--x", "0"], "0"),
    (["--preset", "lucas", "--k", "1", "--x", "1/100"], "19900/9899"),
])
def test_eval(capsys, argv, expected):
    code, out, _ = run(capsys, "eval", *argv)
    assert code == 0
    assert out.strip() == expected


def test_eval_lucas_k3_is_the_oracle_value(capsys):
    code, out, _ = run(capsys, "eval", "--preset", "lucas", "--k", "3", "--x", "1/100")
    assert code == 0
    # sum of L_n^3 / 100^n; the printed table has 794640700/96940301
    assert out.strip() == "776760100/96940301"


def test_eval_pole(capsys):
    code, _, err = run(capsys, "eval", "--preset", "fibonacci", "--k", "2", "--x=-1")
    assert code == 1
    assert "pole" in err


@pytest.mark.parametrize("argv", [
    ["gf", "--k", "1"],
    ["gf", "--preset", "fibonacci", "--symbolic", "--k", "1"],
    ["gf", "--a", "1", "--k", "1"],
    ["gf", "--preset", "fibonacci", "--k", "0"],
    ["eval", "--preset", "fibonacci", "--k", "1"],
    ["eval", "--preset", "fibonacci", "--k", "1", "--x", "1/0"],
    ["series", "--preset", "fibonacci", "--k", "1", "--n", "0"],
    ["verify", "--only", "bogus"],
])
def test_usage_errors(capsys, argv):
    try:
        code = main(argv)
    except SystemExit as exc:
        code = exc.code
    assert code == 1


def test_argparse_errors_exit_1(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["gf", "--preset", "nope", "--k", "1"])
    assert exc.value.code == 1


def test_verify_only_corollary(capsys):
    code, out, _ = run(capsys, "verify", "--only", "corollary")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 5
    assert lines[-1].startswith("4 checks:")


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--json", "--only", "points,linear")
    data = json.loads(out)
    assert code == 0
    assert len(data) == 12 + 12
    assert all(set(r) == {"subject", "status", "details"} for r in data)
    assert {r["status"] for r in data} <= {"PASS", "ERRATUM"}


def test_verify_exit_code_on_fail(capsys, monkeypatch):
    from horadam_gf import cli
    from horadam_gf.verify import VerifyReport

    monkeypatch.setattr(cli, "run_all", lambda only, seed: [VerifyReport("x", "FAIL")])
    code, _, _ = run(capsys, "verify")
    assert code == 2


def test_text_output_is_deterministic():
    cmd = [sys.executable, "-m", "horadam_gf", "gf", "--symbolic", "--k", "3"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and first
