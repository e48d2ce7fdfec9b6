import json
import subprocess
import sys

import pytest

from d21a.cli import main


def run(capsys, *argv):
    status = main(list(argv))
    out = capsys.readouterr()
    return status, out.out, out.err


def test_report_symbolic_json(capsys):
    status, out, _ = run(capsys, "report", "--lambda", "1/3,1/3,1/3", "--format", "json")
    rec = json.loads(out)
    assert status == 0
    assert rec["predicted_degree"] == "exactly 8"
    assert rec["typical"] and rec["inj_full"]
    assert "degree_table" not in rec


def test_report_rational_has_degree_table(capsys):
    status, out, _ = run(capsys, "report", "--alpha", "2", "--lambda", "1/3,1/3,1/3", "--cutoff", "2", "--format", "json")
    rec = json.loads(out)
    assert rec["degree_table"]["drops"] == 0


def test_char_json(capsys):
    status, out, _ = run(capsys, "char", "--cutoff", "8", "--format", "json")
    rec = json.loads(out)
    assert (rec["degree"], rec["graded"]) == (8, [8, 8])
    assert len(rec["bases"]) == 4


def test_char_csv(capsys):
    _, out, _ = run(capsys, "char", "--cutoff", "2", "--format", "csv")
    assert out.splitlines()[0] == "m1,m2,m3,d0,d1"


def test_gram_text(capsys):
    status, out, _ = run(capsys, "gram", "--alpha", "2", "--lambda", "1,2,3", "--weight", "1,0,0")
    assert status == 0 and "rank 1" in out


def test_family_and_twist(capsys):
    _, out, _ = run(capsys, "family", "--a", "1", "--mu", "0", "--format", "json")
    rec = json.loads(out)
    assert not rec["simple_cuspidal"] and rec["annihilated"]
    _, out, _ = run(capsys, "twist", "--lambda", "1/3", "--mu", "a", "--format", "json")
    rec = json.loads(out)
    assert rec["degree"] == 1 and rec["homomorphism"] and rec["relations"]


@pytest.mark.parametrize(
    "argv",
    [
        ["report", "--alpha", "0", "--lambda", "1,1,1"],
        ["report", "--alpha", "-1", "--lambda", "1,1,1"],
        ["report", "--alpha", "a+1", "--lambda", "1,1,1"],
        ["report", "--lambda", "1,(2"],
        ["report", "--lambda", "1,2"],
        ["gram", "--lambda", "1,2,3", "--weight", "1,-1,0"],
        ["gram", "--lambda", "1,2,3"],
        ["char", "--cutoff", "-1"],
        ["twist", "--lambda", "3"],
        ["family"],
    ],
)
def test_errors_exit_nonzero(capsys, argv):
    status, out, err = run(capsys, *argv)
    assert status != 0 and err.startswith("error:")


def test_selftest(capsys):
    status, out, _ = run(capsys, "selftest")
    assert status == 0
    assert "FAIL" not in out


def test_out_file(tmp_path, capsys):
    target = tmp_path / "c.csv"
    assert main(["char", "--cutoff", "1", "--format", "csv", "--out", str(target)]) == 0
    assert target.read_text().startswith("m1,m2,m3,d0,d1\n")


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "d21a", "report", "--lambda", "0,1/3,1/3", "--format", "json"],
        capture_output=True,
        text=True,
        check=True,
    )
    assert json.loads(proc.stdout)["predicted_degree"] == "range 2..4"
