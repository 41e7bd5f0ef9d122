import json
import subprocess
import sys

import pytest

from weylfold.cli import run
from weylfold.domains import polytope_from_json, fundamental_polytope
from weylfold.rootsys import build


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_info_fundamental_group(capsys):
    code, out, _ = call(capsys, "info", "--type", "E6")
    assert code == 0
    assert "Z/3Z" in out


def test_omega_table_line(capsys):
    code, out, _ = call(capsys, "omega", "--type", "E7")
    assert code == 0
    assert "σ_7 = (0,7)(1,6)(3,5)" in out


def test_fold_point(capsys):
    code, out, _ = call(capsys, "fold", "--type", "A2", "--lattice", "adjoint", "--point", "2/3,2/3")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "point: 1/3,1/3"
    assert lines[1].startswith("witness: ")


def test_fold_json(capsys):
    code, out, _ = call(capsys, "fold", "--type", "A2", "--point", "2/3,2/3", "--format", "json")
    data = json.loads(out)
    assert data["point"] == ["1/3", "1/3"]
    assert data["witness"]["translation"] == ["1", "1"]


def test_canon(capsys):
    code, out, _ = call(capsys, "canon", "--type", "A3", "--lattice", "H=2", "--point", "1,0,0")
    assert code == 0
    assert out.splitlines()[0] == "canonical: 0,0,1"


def test_vertices_json_round_trip(capsys):
    code, out, _ = call(capsys, "vertices", "--type", "A3", "--lattice", "H=2", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert set(data) == {"type", "lattice", "halfspaces", "vertices"}
    back = polytope_from_json(data)
    p = fundamental_polytope(build("A3"), {2})
    assert back.halfspaces == p.halfspaces and back.vertices == p.vertices


def test_lattices_and_export(capsys, tmp_path):
    code, out, _ = call(capsys, "lattices", "--type", "D4")
    assert code == 0 and len(out.splitlines()) == 6
    target = tmp_path / "cells.json"
    code, _, _ = call(capsys, "export", "--type", "A3", "--lattice", "sc", "--domain", "complex",
                      "--output", str(target))
    assert code == 0
    assert len(json.loads(target.read_text())) == 4


@pytest.mark.parametrize("argv", [
    ["fold", "--type", "A2", "--point", "1/0,1"],
    ["fold", "--type", "A2", "--point", "1,2,3"],
    ["fold", "--type", "A3", "--lattice", "H=5", "--point", "0,0,0"],
    ["info", "--type", "Q7"],
    ["info"],
    ["frobnicate", "--type", "A2"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = call(capsys, *argv)
    assert code == 2
    assert err


def test_verify_passes(capsys):
    code, out, _ = call(capsys, "verify", "--type", "A2", "--points", "20")
    assert code == 0
    assert out.splitlines()[-1] == "A2: PASS"


def test_verify_failure_exits_1(capsys, monkeypatch):
    import weylfold.cli as cli
    from weylfold.verify import CheckResult

    monkeypatch.setattr(cli, "run_suite", lambda rs, **kw: [CheckResult("x", False, 1, "", ["boom"])])
    code, out, _ = call(capsys, "verify", "--type", "A2")
    assert code == 1
    assert "counterexample: boom" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "weylfold", "info", "--type", "D5"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "Z/4Z" in proc.stdout
