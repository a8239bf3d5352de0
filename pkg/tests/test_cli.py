import io
import json
import subprocess
import sys

import pytest

from cubicsurf import tabledata
from cubicsurf.cli import run
from cubicsurf.picard import DivisorClass, lines27, pencils27


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_lines_json_round_trip():
    code, out, _ = call("--format", "json", "lines")
    assert code == 0
    data = json.loads(out)
    assert len(data) == 27
    assert {DivisorClass(tuple(r["class"])) for r in data} == set(lines27())
    assert data[0]["name"] == "E1"


def test_pencils_tsv():
    code, out, _ = call("--format", "tsv", "pencils")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split("\t") == ["#", "name", "L", "E1", "E2", "E3", "E4", "E5", "E6"]
    classes = {DivisorClass(tuple(int(x) for x in ln.split("\t")[2:])) for ln in lines[1:]}
    assert classes == set(pencils27())


def test_nefcone_json():
    code, out, _ = call("--format", "json", "nefcone")
    data = json.loads(out)
    assert data["count"] == 99
    assert {tuple(r) for r in data["rays"]} == set(tabledata.TABLE_1)


@pytest.mark.parametrize("argv, table", [
    (("subcone", "--pencil", "L1"), tabledata.TABLE_2),
    (("subcone", "--hyperplane"), tabledata.TABLE_3),
])
def test_subcone_json(argv, table):
    code, out, _ = call("--format", "json", *argv)
    assert code == 0
    assert {tuple(r) for r in json.loads(out)["rays"]} == {v for v, _ in table}


def test_subcone_bad_pencil():
    code, _, err = call("subcone", "--pencil", "E1")
    assert code == 1
    assert "pencil" in err


def test_seshadri_with_oracle():
    code, out, _ = call("--format", "json", "seshadri", "3", "-1", "-1", "-1", "-1", "-1", "-1", "--oracle")
    assert code == 0
    data = json.loads(out)
    assert data["value"] == "3/2"
    assert data["oracle"] == "3/2"
    assert data["agrees"] is True
    assert data["certificates"] == ["hyperplane-section"]


def test_seshadri_table_output():
    code, out, _ = call("seshadri", "1", "0", "0", "0", "0", "0", "0")
    assert code == 0
    assert "value" in out and " 1" in out


def test_alpha_node_rational():
    code, out, _ = call("--format", "json", "alpha", "3", "-1", "-1", "-1", "-1", "-1", "-1",
                        "--tangent", "node-rational")
    assert code == 0
    data = json.loads(out)
    assert data["value"] == "2"
    assert len(data["certificates"]) == 27


def test_curve_alpha():
    code, out, _ = call("--format", "json", "curve-alpha", "--degree", "3", "--branch", "2,1")
    assert json.loads(out)["alpha"] == "3/2"
    code, out, _ = call("--format", "json", "curve-alpha", "--degree", "3",
                        "--branch", "1,0", "--branch", "1,0")
    assert json.loads(out)["alpha"] == "inf"


def test_verify_all():
    code, out, _ = call("--format", "json", "verify", "all")
    assert code == 0
    data = json.loads(out)
    assert len(data) == 4
    assert all(r["pass"] for r in data)


def test_estimate_alpha(tmp_path):
    path = tmp_path / "seq.csv"
    code, out, _ = call("--format", "json", "estimate-alpha", "--kind", "cusp",
                        "--length", "200", "--csv", str(path))
    assert code == 0
    assert abs(json.loads(out)["estimate"] - 1.5) < 0.1
    assert path.read_text().startswith("i,height,distance,gamma\n")


def test_estimate_quadric():
    code, out, _ = call("--format", "json", "estimate-alpha", "--kind", "quadric:2,3", "--length", "200")
    data = json.loads(out)
    assert abs(data["estimate"] - 2) < 0.1
    assert set(data["sequences"]) == {"first", "second", "diagonal"}


@pytest.mark.parametrize("argv", [
    ("bogus",),
    ("seshadri", "1", "2"),
    ("seshadri", "0", "0", "0", "0", "0", "0", "1"),
    ("alpha", "1", "0", "0", "0", "0", "0", "0", "--tangent", "tacnode"),
    ("curve-alpha", "--degree", "3", "--branch", "2,5"),
    ("curve-alpha", "--degree", "0", "--branch", "1,1"),
    ("estimate-alpha", "--kind", "circle", "--length", "100"),
    ("estimate-alpha", "--kind", "line", "--length", "3"),
    ("--format", "xml", "lines"),
])
def test_usage_errors(argv):
    code, out, err = call(*argv)
    assert code == 1
    assert err
    assert not out


def test_module_entry_point_is_deterministic():
    cmd = [sys.executable, "-m", "cubicsurf", "verify", "all"]
    a = subprocess.run(cmd, capture_output=True)
    b = subprocess.run(cmd, capture_output=True)
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout
    assert b"FAIL" not in a.stdout
