import json
import subprocess
import sys
from pathlib import Path

import pytest

from haggelab.cli import main

ROOT = Path(__file__).resolve().parents[1]
DEMO = str(ROOT / "demos" / "t1_hagge.geo")


def _audit(data) -> dict:
    return {e["eq"]: e for e in data["records"]["audit"]}


def test_verify_writes_report(tmp_path):
    out = tmp_path / "r.json"
    assert main(["verify", "--suite", "hagge", "--instances", "5", "--seed", "7", "--report", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["summary"]["pass"] and data["seed"] == 7


def test_verify_all(tmp_path):
    out = tmp_path / "r.json"
    assert main(["verify", "--suite", "all", "--instances", "2", "--report", str(out)]) == 0
    data = json.loads(out.read_text())
    assert [s["suite"] for s in data["suites"]] == ["hagge", "speckman", "section8"]


def test_verify_is_byte_deterministic(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path, jobs in ((a, "1"), (b, "2")):
        main(["verify", "--suite", "speckman", "--instances", "4", "--seed", "9", "--report", str(path), "--jobs", jobs])
    assert a.read_bytes() == b.read_bytes()


def test_bad_suite_is_usage_error(capsys):
    assert main(["verify", "--suite", "bogus"]) == 2
    assert "invalid choice" in capsys.readouterr().err


def test_missing_verb():
    assert main([]) == 2


def test_oracle8(tmp_path, capsys):
    out = tmp_path / "o.json"
    code = main(["oracle8", "--v", "1", "--w", "2", "--m", "1", "--k", "2", "--report", str(out)])
    assert code == 0
    audit = _audit(json.loads(out.read_text()))
    assert audit["point_Q"]["status"] == "match"
    assert audit["point_U"]["status"] == "mismatch"
    assert "point_U" in capsys.readouterr().err


def test_oracle8_degenerate():
    assert main(["oracle8", "--v", "1", "--w", "1", "--m", "1", "--k", "2"]) == 2


def test_oracle8_bad_scalar():
    assert main(["oracle8", "--v", "x", "--w", "1", "--m", "1", "--k", "2"]) == 2


def test_construct(tmp_path):
    out = tmp_path / "env.json"
    assert main(["construct", DEMO, "--json", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["environment"]["P"] == {"x": "4/3", "y": "1"}
    assert data["report"]["pass"]


def test_construct_failing_assertion(tmp_path):
    script = tmp_path / "f.geo"
    script.write_text("point A = (0,0)\npoint B = (1,0)\npoint C = (2,1)\nassert collinear(A, B, C)\n")
    out = tmp_path / "f.json"
    assert main(["construct", str(script), "--json", str(out)]) == 1
    assert out.exists()


def test_construct_parse_error(tmp_path, capsys):
    script = tmp_path / "bad.geo"
    script.write_text("point A = (0 0)\n")
    assert main(["construct", str(script)]) == 2
    assert ":1:14: SyntaxError" in capsys.readouterr().err


def test_construct_missing_file(tmp_path):
    assert main(["construct", str(tmp_path / "none.geo")]) == 2


def test_figure(tmp_path):
    out = tmp_path / "f.svg"
    assert main(["figure", DEMO, "--svg", str(out)]) == 0
    assert out.read_text() == (ROOT / "tests" / "data" / "t1_hagge.svg").read_text()


def test_figure_without_draws(tmp_path):
    script = tmp_path / "n.geo"
    script.write_text("point A = (0,0)\n")
    assert main(["figure", str(script), "--svg", str(tmp_path / "n.svg")]) == 2


@pytest.mark.parametrize("argv", [["figure", DEMO, "--width", "0"], ["verify", "--suite", "hagge", "--jobs", "0"]])
def test_nonpositive_counts(argv):
    assert main(argv) == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "haggelab", "verify", "--suite", "section8", "--instances", "2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["suite"] == "section8"
