import io
import json
import subprocess
import sys

import pytest

from qlie.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_verify_exit_codes():
    assert call("verify", "--n", "3", "--filtration", "max")[0] == 0
    assert call("verify", "--n", "3", "--filtration", "sum")[0] == 1
    code, _, err = call("verify", "--n", "0")
    assert code == 2 and "--n" in err


@pytest.mark.parametrize("argv", [
    ["verify"], ["frobnicate", "--n", "2"], ["verify", "--n", "x"],
    ["pbw", "--n", "2", "--max-len", "0"], ["graded", "--n", "2", "--max-level", "-1"],
    ["ybe", "--n", "2", "--space", "diagonal"], ["nf", "--n", "2", "--expr", "e(2,1)"],
    ["nf", "--n", "2", "--expr", "e(1,9)"],
])
def test_usage_and_parse_errors(argv):
    assert call(*argv)[0] == 2


def test_nf_prints_normal_form():
    code, out, _ = call("nf", "--n", "2", "--expr", "e(2,3)*e(1,2)")
    assert code == 0
    assert out == "q*e(1,2)*e(2,3) - q*e(1,3)\n"
    _, out, _ = call("nf", "--n", "2", "--expr", "e(2,3)*e(1,2)", "--mode", "symmetric")
    assert out == "q*e(1,2)*e(2,3)\n"


def test_nf_trace_is_json_lines():
    _, out, _ = call("nf", "--n", "3", "--expr", "e(3,4)*e(2,4)*e(1,4)", "--trace")
    lines = out.strip().split("\n")
    steps = [json.loads(l) for l in lines[:-1]]
    assert [s["step"] for s in steps] == list(range(1, len(steps) + 1))
    assert lines[-1] == steps[-1]["current"]


def test_report_schema(tmp_path):
    p = tmp_path / "r.json"
    assert call("pbw", "--n", "2", "--max-len", "2", "--json", str(p))[0] == 0
    r = json.loads(p.read_text())
    assert r["schema"] == 1 and r["tool"] == "qlie" and r["command"] == "pbw"
    assert r["config"] == {"command": "pbw", "max_len": 2, "mode": "enveloping", "n": 2}
    assert r["passed"] is True
    assert [c["check"] for c in r["checks"]] == ["confluence[enveloping]", "pbw_independence[enveloping]"]
    assert "elapsed" not in json.dumps(r)


@pytest.mark.parametrize("argv", [
    ["verify", "--n", "3"], ["graded", "--n", "2", "--seed", "4"], ["ybe", "--n", "2", "--space", "full"],
    ["dump", "--n", "2"], ["pbw", "--n", "2", "--mode", "both"],
])
def test_json_is_byte_identical_across_runs(tmp_path, argv):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    call(*argv, "--json", str(a))
    call(*argv, "--json", str(b))
    assert a.read_bytes() == b.read_bytes()


def test_graded_records_confluence_status(tmp_path):
    p = tmp_path / "g.json"
    assert call("graded", "--n", "2", "--max-level", "4", "--json", str(p))[0] == 0
    assert json.loads(p.read_text())["checks"][0]["status"] == "certified"
    assert call("graded", "--n", "2", "--max-level", "4", "--assume-confluent", "--json", str(p))[0] == 0
    first = json.loads(p.read_text())["checks"][0]
    assert first == {"check": "confluence[enveloping]", "passed": True, "status": "assumed"}


def test_graded_dump_matrix(tmp_path):
    m = tmp_path / "m.txt"
    call("graded", "--n", "2", "--max-level", "3", "--trials", "0", "--dump-matrix", str(m))
    text = m.read_text()
    assert "# level 2: 2 x 2" in text and "# level 3: 1 x 1" in text


def test_ybe_reports(tmp_path):
    p = tmp_path / "y.json"
    assert call("ybe", "--n", "2", "--json", str(p))[0] == 0
    checks = json.loads(p.read_text())["checks"]
    assert [(c["check"], c.get("space"), c.get("variant")) for c in checks] == [
        ("inverse", None, None), ("braid", "V1", "left"), ("braid", "V2", "right")]
    code, out, _ = call("ybe", "--n", "2", "--space", "full", "--check", "braid", "--json", str(p))
    assert code == 1
    w = json.loads(p.read_text())["checks"][0]["witness"]
    assert w["input"] == "e(1,2)*e(1,2)*e(2,3)"
    # witnesses go to JSON only
    assert "e(1,2)*e(1,2)*e(2,3)" not in out


def test_dump_tables(tmp_path):
    p = tmp_path / "d.json"
    assert call("dump", "--n", "3", "--json", str(p))[0] == 0
    d = json.loads(p.read_text())["checks"][0]
    assert d["pseudobracket"]["e(1,3),e(2,4)"] == "(q - q^-1)*e(2,3)*e(1,4)"


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "qlie", "nf", "--n", "2", "--expr", "e(1,3)*e(1,2)"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout == "q^-1*e(1,2)*e(1,3)\n"
