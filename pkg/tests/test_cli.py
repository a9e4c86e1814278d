import json
import subprocess
import sys

import pytest

from ruledscroll.cli import main
from ruledscroll.verify import fixture_path


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def fx(name):
    return str(fixture_path(name))


def test_classify_cubic(capsys):
    code, out, _ = run(capsys, "classify", "--scenario", fx("cubic_scroll"))
    doc = json.loads(out)
    assert code == 0
    assert next(iter(doc)) == "schema_version"
    rep = doc["systems"]["H"]["report"]
    assert (rep["h0"], rep["degree"], rep["very_ample"]["value"]) == (5, 3, "True")


def test_output_is_deterministic(capsys):
    a = run(capsys, "classify", "--scenario", fx("hyperelliptic_g2"))[1]
    b = run(capsys, "classify", "--scenario", fx("hyperelliptic_g2"))[1]
    assert a == b


def test_invalid_position_exit_code(capsys):
    code, out, err = run(capsys, "transform", "--scenario", fx("elliptic_chain"), "--surface", "A",
                         "--steps", "P:OnX1")
    assert code == 2
    assert json.loads(out)["error"]["invariant"] == "InvalidPosition"
    assert "InvalidPosition" in err


def test_scenario_error_exit_code(capsys, tmp_path):
    p = tmp_path / "s.json"
    p.write_text(json.dumps({"curve": {"genus": 2, "points": ["A"], "h0": {"3A": 3}}}))
    code, out, _ = run(capsys, "classify", "--scenario", str(p))
    assert code == 1
    assert json.loads(out)["status"] == "error"
    code, _, _ = run(capsys, "classify")
    assert code == 1


def test_transform_trace(capsys):
    code, out, _ = run(capsys, "transform", "--scenario", fx("elliptic_chain"), "--surface", "S",
                       "--steps", "P0:OffBothBasePointFiber,*1:OnMinSection")
    trace = json.loads(out)["trace"]
    assert code == 0
    assert [t["surface"]["e"] for t in trace] == [1, 0, 1]
    assert [t["surface"]["decomposable"] for t in trace] == ["True", "False", "True"]


def test_project_trajectory(capsys):
    code, out, _ = run(capsys, "project", "--scenario", fx("elliptic_quintic"), "--n", "2")
    traj = json.loads(out)["trajectory"]
    assert [(t["d"], t["N"]) for t in traj] == [(5, 4), (4, 3), (3, 2)]


def test_report_and_text_format(capsys, tmp_path):
    target = tmp_path / "r.txt"
    code, out, _ = run(capsys, "report", "--scenario", fx("hyperelliptic_g2"), "--system", "H",
                       "--cycle", "3:1", "--format", "text", "--out", str(target))
    assert code == 0 and out == ""
    text = target.read_text()
    assert text.startswith("schema_version: 1")
    assert "current_i: 2" in text


def test_bad_cycle(capsys):
    code, _, _ = run(capsys, "report", "--scenario", fx("hyperelliptic_g2"), "--cycle", "3")
    assert code == 1
    code, _, _ = run(capsys, "report", "--scenario", fx("hyperelliptic_g2"), "--cycle", "1:1")
    assert code == 2


def test_named_domain_flag(capsys):
    code, out, _ = run(capsys, "classify", "--scenario", fx("cones"), "--system", "H1",
                       "--quantifier-domain", "named")
    assert json.loads(out)["systems"]["H1"]["report"]["quantifier_domain"] == "named"


def test_run_scripts(capsys):
    code, out, _ = run(capsys, "run", "--scenario", fx("cubic_scroll"))
    doc = json.loads(out)
    assert code == 0
    assert [s["argv"][0] for s in doc["scripts"]] == ["classify", "project", "report"]


def test_verify_via_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "ruledscroll", "verify"], capture_output=True, text=True)
    assert proc.returncode == 0, proc.stdout
    doc = json.loads(proc.stdout)
    assert doc["failed"] == 0 and doc["passed"] == 10
