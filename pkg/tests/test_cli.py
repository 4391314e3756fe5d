import json
import subprocess
import sys
from fractions import Fraction

import pytest

from qhermite import cli, verify
from qhermite.cli import EXIT_FAIL, EXIT_NONCONVERGENCE, EXIT_OK, EXIT_USAGE, main, parse_q, parse_range


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_table_text(capsys):
    code, out, _ = run(capsys, "table", "--family", "HI", "--n", "0..4")
    assert code == EXIT_OK
    lines = out.strip().splitlines()
    assert lines[0] == "0: 1" and lines[1] == "1: x"
    assert len(lines) == 5


def test_table_json_and_latex(capsys):
    code, out, _ = run(capsys, "table", "--family", "H", "--n", "2..3", "--format", "json")
    rows = json.loads(out)
    assert code == EXIT_OK and [r["n"] for r in rows] == [2, 3]
    code, out, _ = run(capsys, "table", "--family", "K", "--n", "2", "--format", "latex")
    assert code == EXIT_OK and out.startswith("K_{2} &=")


def test_table_rational_q(capsys):
    code, out, _ = run(capsys, "table", "--family", "HI", "--n", "2", "--q", "1/2")
    assert code == EXIT_OK and "1/2" in out


def test_verify_all(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "all", "--n-max", "8")
    report = json.loads(out)
    assert code == EXIT_OK and report["pass"] is True
    assert report["identities"] >= 15
    assert set(report["suites"]) == set(verify.SUITES)
    tags = {e["paper_ref"] for e in report["entries"]}
    assert "orthogonality:HBAR-witness" in tags
    witness = [e for e in report["entries"] if e["paper_ref"] == "orthogonality:HBAR-witness"]
    assert witness and all(e["status"] == "pass" for e in witness)


def test_verify_text_and_family(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "ladder", "--family", "K", "--n-max", "5", "--format", "text")
    assert code == EXIT_OK and out.strip().endswith("identities")
    assert out.startswith("PASS")


def test_verify_failure_exit(capsys, monkeypatch):
    monkeypatch.setitem(verify._CHECKS, "umbral", lambda *a: False)
    assert any(t.func == "umbral" for t in verify.tasks_for("umbral", 3))
    code, out, _ = run(capsys, "verify", "--suite", "umbral", "--n-max", "3")
    assert code == EXIT_FAIL and json.loads(out)["pass"] is False


def test_integrate_jackson(capsys):
    code, out, _ = run(capsys, "integrate", "--jackson", "x", "--b", "1", "--q", "0.5")
    assert code == EXIT_OK
    assert json.loads(out)["value"] == pytest.approx(2 / 3, abs=1e-12)


def test_integrate_measures(capsys):
    code, out, _ = run(capsys, "integrate", "--measure", "I", "--q", "0.5", "--n-max", "8")
    assert code == EXIT_OK and json.loads(out)["pass"] is True
    code, out, _ = run(capsys, "integrate", "--measure", "II", "--q", "0.5", "--c", "0.5,1,2")
    report = json.loads(out)
    assert code == EXIT_OK and report["pass"] is True
    assert any(r["identity"] == "L(x^2m) independent of c" for r in report["results"])


def test_integrate_nonconvergence(capsys):
    code, _, err = run(capsys, "integrate", "--jackson", "1", "--q", "0.95", "--max-terms", "50")
    assert code == EXIT_NONCONVERGENCE and "no convergence" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["integrate", "--q", "0.99"],
        ["integrate", "--jackson", "import os", "--q", "0.5"],
        ["integrate", "--q", "0.5", "--c", "a,b"],
        ["table", "--family", "Z"],
        ["table", "--family", "H", "--n", "4..2"],
        ["table", "--family", "H", "--q", "0.5"],
        ["tangent", "--q", "0"],
        ["verify", "--n-max", "-1"],
        ["bogus"],
    ],
)
def test_usage_errors(capsys, argv):
    try:
        code = main(argv)
    except SystemExit as exc:  # argparse and parser.error
        code = exc.code
    assert code == EXIT_USAGE


def test_tangent(capsys):
    code, out, _ = run(capsys, "tangent", "--q", "1", "--n-max", "4")
    assert code == EXIT_OK
    assert out.splitlines() == ["T: 1, 2, 16, 272, 7936", "E: 1, 1, 5, 61, 1385"]
    code, out, _ = run(capsys, "tangent", "--symbolic", "--n-max", "2")
    assert out.splitlines()[0] == "T: 1, q + q^2, " + out.splitlines()[0].split(", ", 2)[2]
    code, out, _ = run(capsys, "tangent", "--check-phi", "--n-max", "6", "--format", "json")
    assert code == EXIT_OK and json.loads(out)["pass"] is True


def test_tangent_rational_json(capsys):
    code, out, _ = run(capsys, "tangent", "--q", "1/2", "--n-max", "1", "--format", "json")
    data = json.loads(out)
    assert data["tangent"] == ["1", "3/4"] and data["q"] == "1/2"


def test_parsers():
    assert parse_q("1/2") == ("rational", Fraction(1, 2))
    assert parse_q("0.5") == ("float", 0.5)
    assert parse_q(None) == ("symbolic", None)
    assert parse_range("3") == (3, 3) and parse_range("0..4") == (0, 4)
    with pytest.raises(cli.UsageError):
        parse_q("x")
    with pytest.raises(cli.UsageError):
        parse_range("a..b")


def test_console_entry_point():
    res = subprocess.run([sys.executable, "-m", "qhermite.cli", "tangent", "--q", "1", "--n-max", "2"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.startswith("T: 1, 2, 16")
