import json
import subprocess
import sys

import pytest

from teichcurves.cli import REPORT_SCHEMA, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    return code, json.loads(out)


def test_certify_point(capsys):
    code, rep = run_json(capsys, "certify", "--disc", "12", "--point")
    assert code == 0 and rep["status"] == "pass" and rep["schema"] == REPORT_SCHEMA
    assert rep["data"]["record"]["x"] == ["0", "1", "0"]
    assert rep["data"]["record"]["lambda"] == "1"


def test_certify_family(capsys):
    code, rep = run_json(capsys, "certify", "--disc", "12", "--family")
    assert code == 0
    runs = rep["data"]["specializations"]["runs"]
    assert len(runs) == 10 and all(r["ok"] for r in runs)


def test_cusps_spin(capsys):
    code, rep = run_json(capsys, "cusps", "--disc", "17", "--spin")
    assert code == 0 and rep["data"]["counts"]["spin_split"] == [3, 3]


def test_singular_primes_60(capsys):
    code, rep = run_json(capsys, "singular-primes", "--disc", "60")
    assert code == 0 and rep["data"]["result"]["primes"] == [2, 3, 5, 7, 11]


def test_cusp_poly_12(capsys):
    code, rep = run_json(capsys, "cusp-poly", "--disc", "12")
    assert code == 0 and rep["status"] == "pass"


def test_mordell(capsys):
    code, rep = run_json(capsys, "mordell", "--disc", "44")
    assert code == 0 and rep["status"] == "pass"


def test_stable_limit_reports_formula_match(capsys):
    code, rep = run_json(capsys, "report", "--all")
    assert code == 0
    (f,) = [f for f in rep["findings"] if f["code"] == "stable limit: stable limit"]
    assert f["matches"] == ["prototype formula"] and "does not match ['display']" in f["message"]


def test_data_validate_strict(capsys):
    code, rep = run_json(capsys, "data", "validate")
    assert code == 0 and rep["status"] == "pass"
    assert any(f.get("suspect") and f["code"].startswith("D=65") for f in rep["findings"])
    code, rep = run_json(capsys, "data", "validate", "--strict")
    assert code == 3


@pytest.mark.parametrize("argv", [
    ("cusps", "--disc", "16"),
    ("certify", "--disc", "13", "--point"),
    ("cusps", "--disc", "12", "--spin"),
    ("cusp-poly", "--disc", "21"),
    ("mordell", "--disc", "12"),
    ("certify", "--disc", "12", "--point", "--cert", "/nonexistent/cert.json"),
])
def test_input_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and not out
    assert "error" in json.loads(err)


def test_usage_error_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["cusps"])
    assert exc.value.code == 2


def test_pretty_output(capsys):
    code, out, _ = run(capsys, "singular-primes", "--disc", "44", "--pretty")
    assert code == 0 and "PASS" in out.upper()


def test_output_is_byte_identical(capsys):
    _, a, _ = run(capsys, "certify", "--disc", "12", "--point")
    _, b, _ = run(capsys, "certify", "--disc", "12", "--point")
    assert a == b
    assert "wall_time_s" not in a
    _, c, _ = run(capsys, "certify", "--disc", "12", "--point", "--timing")
    assert "wall_time_s" in c


def test_report_all_subprocess():
    cmd = [sys.executable, "-m", "teichcurves", "report", "--all"]
    first = subprocess.run(cmd, capture_output=True, check=False)
    second = subprocess.run(cmd, capture_output=True, check=False)
    assert first.returncode == 0, first.stderr.decode()
    assert first.stdout == second.stdout
    rep = json.loads(first.stdout)
    assert rep["status"] == "pass"
    assert all(f["status"] == "pass" for f in rep["findings"])
