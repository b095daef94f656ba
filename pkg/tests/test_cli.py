import io
import json
import math
import subprocess
import sys
from pathlib import Path

import pytest

from jacobi_lie import cli, oracle

GOLDEN = Path(__file__).parent / "golden" / "table_10x3.csv"
GOLDEN_ARGS = ["table", "--u-range", "0:0.9", "--step", "0.1", "--kappa", "0.1,0.5,0.9"]


def run(*argv):
    out = io.StringIO()
    code = cli.run(list(argv), out=out)
    return code, out.getvalue()


def test_verify_default_grid():
    code, text = run("verify")
    report = json.loads(text)
    assert code == 0
    assert report["pass"] is True
    assert [c["gamma"] for c in report["cases"]] == list(cli.DEFAULT_GAMMA_GRID)


def test_verify_explicit_grid():
    code, text = run("verify", "--gamma", "0,0.5,0.9", "--tol", "1e-10")
    assert code == 0
    case = json.loads(text)["cases"][1]
    assert case["structure"]["pass"] and case["casimir"]["pass"]
    assert case["generator_agreement"]["max_residual"] < 1e-12
    assert case["casimir"]["expected_scalar"] == pytest.approx(-0.5625)


def test_verify_degenerate_gamma():
    code, text = run("verify", "--gamma", "1.0")
    case = json.loads(text)["cases"][0]
    assert case["degenerate"] is True
    assert case["biorthogonality"]["skipped"] is True
    assert "bi-orthogonality fails" in case["biorthogonality"]["reason"]
    assert case["l3_coefficient"] == 0
    assert code == 0


def exit_code(*argv):
    try:
        return run(*argv)[0]
    except SystemExit as exc:  # argparse rejects malformed flags itself
        return exc.code


@pytest.mark.parametrize("grid", ["1.5", "-0.2", "0.3,abc"])
def test_verify_bad_grid(grid):
    assert exit_code("verify", "--gamma", grid) == 2


def test_verify_failure_exit_code(monkeypatch):
    monkeypatch.setattr(cli.biortho, "structure_coefficient", lambda j, k, l, g: 0.0)
    code, text = run("verify", "--gamma", "0.5")
    assert code == 1
    assert json.loads(text)["pass"] is False


def test_env_tolerance(monkeypatch):
    monkeypatch.setenv("JACOBI_LIE_TOL", "1e-30")
    code, text = run("verify", "--gamma", "0.7")
    assert json.loads(text)["tol"] == 1e-30
    assert code == 1
    monkeypatch.setenv("JACOBI_LIE_TOL", "nope")
    assert run("verify")[0] == 2


def test_eval_origin():
    code, text = run("eval", "--u", "0", "--kappa", "0.5", "--route", "all")
    rec = json.loads(text)
    assert code == 0
    for route in cli.ROUTES:
        assert (rec[route]["sn"], rec[route]["cn"], rec[route]["dn"]) == (0, 1, 1)
    assert rec["max_route_disagreement"] < 1e-12


def test_eval_single_route():
    code, text = run("eval", "--u", "1.57079632679", "--kappa", "0", "--route", "ode")
    rec = json.loads(text)
    assert set(rec) == {"u", "kappa", "ode", "max_route_disagreement"}
    assert rec["ode"]["sn"] == pytest.approx(1, abs=1e-9)
    assert rec["ode"]["cn"] == pytest.approx(0, abs=1e-9)
    assert rec["ode"]["dn"] == 1


def test_eval_consistency():
    code, text = run("eval", "--u", "2.2", "--kappa", "0.7", "--route", "all")
    assert json.loads(text)["max_route_disagreement"] < 1e-8


@pytest.mark.parametrize("argv", [
    ["eval", "--u", "1", "--kappa", "1"],
    ["eval", "--u", "1", "--kappa", "-0.5"],
    ["eval", "--u", "inf"],
    ["table", "--u-range", "1:0", "--step", "0.1"],
    ["table", "--u-range", "0:1", "--step", "0"],
    ["invert", "--x", "2", "--which", "sn"],
])
def test_usage_errors(argv):
    assert exit_code(*argv) == 2


def test_table_one_row_matches_eval():
    _, table = run("table", "--u-range", "0.7:0.7", "--step", "1", "--kappa", "0.4")
    lines = table.splitlines()
    assert lines[0] == cli.CSV_HEADER
    rec = cli.cmd_eval(0.7, 0.4)
    assert lines[1:] == [rec.csv_row()]
    _, js = run("table", "--u-range", "0.7:0.7", "--step", "1", "--kappa", "0.4", "--format", "json")
    assert json.loads(js) == [json.loads(run("eval", "--u", "0.7", "--kappa", "0.4")[1])]


def test_table_trig_limit():
    _, text = run("table", "--u-range", "0:6", "--step", "0.25", "--kappa", "0")
    for row in text.splitlines()[1:]:
        u, k, s, c, d, _ = map(float, row.split(","))
        assert s == pytest.approx(math.sin(u), abs=1e-9)
        assert c == pytest.approx(math.cos(u), abs=1e-9)
        assert d == 1


def test_table_order_and_sweep():
    kappas = [0.1, 0.3, 0.5, 0.7, 0.9]
    _, text = run("table", "--u-range", "0:4.9", "--step", "0.1",
                  "--kappa", ",".join(map(str, kappas)))
    rows = [list(map(float, r.split(","))) for r in text.splitlines()[1:]]
    assert len(rows) == 250
    assert [r[1] for r in rows] == sorted(r[1] for r in rows)
    for i in range(0, 250, 50):
        us = [r[0] for r in rows[i:i + 50]]
        assert us == sorted(us)
    assert max(r[5] for r in rows) < 1e-8


def test_table_golden_byte_identical():
    _, first = run(*GOLDEN_ARGS)
    _, second = run(*GOLDEN_ARGS)
    assert first == second
    assert first.encode() == GOLDEN.read_bytes()
    assert "\r" not in first and first.endswith("\n")


def test_invert():
    assert run("invert", "--x", "0", "--which", "sn")[1].strip() == "0"
    assert float(run("invert", "--x", "1", "--which", "sn", "--kappa", "0")[1]) == pytest.approx(math.pi / 2, abs=1e-14)


@pytest.mark.parametrize("which", ["sn", "cn", "dn"])
def test_invert_round_trip(which):
    u, k = 0.9, 0.6
    rec = json.loads(run("eval", "--u", str(u), "--kappa", str(k), "--route", "ode")[1])
    x = rec["ode"][which]
    back = float(run("invert", "--x", repr(x), "--which", which, "--kappa", str(k))[1])
    assert back == pytest.approx(u, abs=1e-8)


def test_invert_paper_literal_flag():
    k, u = 0.6, 0.7
    d = oracle.jacobi_agm(u, k)[2]
    std = float(run("invert", "--x", repr(d), "--which", "dn", "--kappa", str(k))[1])
    lit = float(run("invert", "--x", repr(d), "--which", "dn", "--kappa", str(k), "--paper-literal")[1])
    assert std == pytest.approx(u, abs=1e-8)
    assert abs(lit - u) > 0.1


def test_fmt():
    assert cli.fmt(-0.0) == "0"
    assert cli.fmt(0.1 + 0.2) == "0.3"
    assert cli.fmt(1 / 3) == "0.333333333333333"


def test_module_entrypoint():
    res = subprocess.run([sys.executable, "-m", "jacobi_lie", "invert", "--x", "1", "--which", "sn"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0
    assert float(res.stdout) == pytest.approx(math.pi / 2)
    bad = subprocess.run([sys.executable, "-m", "jacobi_lie", "verify", "--gamma", "1.5"],
                         capture_output=True, text=True, check=False)
    assert bad.returncode == 2
