import json
import subprocess
import sys

import pytest

from graphgen import two_triangles
from graphmotive.cli import RunReport, main
from graphmotive.embedding import RotationSystem, family_rotation
from graphmotive.graph import Multigraph, edge_isomorphic, family


@pytest.fixture
def write(tmp_path):
    def _write(name, data):
        path = tmp_path / name
        path.write_text(json.dumps(data))
        return str(path)

    return _write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err.strip()


def test_psi(capsys, write):
    assert run(capsys, "psi", write("b.json", family("banana", 3).to_json())) == (0, "t1*t2 + t1*t3 + t2*t3", "")
    assert run(capsys, "psi", write("s.json", family("star", 3).to_json()))[:2] == (0, "1")
    code, _, err = run(capsys, "psi", write("d.json", {"vertex_count": 2, "edges": []}))
    assert code == 2 and "not connected" in err


def test_psi_json_output(capsys, write):
    code, out, _ = run(capsys, "psi", "--family", "polygon", "--n", "3", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert data["result"]["text"] == "t1 + t2 + t3"
    assert data["result"]["poly"]["n"] == 3


def test_psi_bad_json(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(capsys, "psi", str(bad))[0] == 2


def test_dual(capsys, write):
    code, out, _ = run(capsys, "dual", write("p.json", family_rotation("polygon", 4).to_json()))
    assert code == 0
    d = RotationSystem.from_json(json.loads(out))
    assert edge_isomorphic(d.graph, family("banana", 4))

    code, out, _ = run(capsys, "dual", "--family", "star", "--n", "3")
    assert edge_isomorphic(RotationSystem.from_json(json.loads(out)).graph, family("flower", 3))


def test_dual_invalid_rotation(capsys, write):
    torus = family_rotation("banana", 3).to_json()
    torus["rotation"][1] = list(reversed(torus["rotation"][1]))
    code, _, err = run(capsys, "dual", write("t.json", torus))
    assert code == 3 and "sphere" in err
    broken = family_rotation("banana", 3).to_json()
    broken["rotation"][0] = broken["rotation"][0][:2]
    assert run(capsys, "dual", write("x.json", broken))[0] == 3
    assert run(capsys, "dual", write("g.json", family("banana", 3).to_json()))[0] == 3


def test_class(capsys):
    assert run(capsys, "class", "--family", "banana", "--n", "3")[1].splitlines()[0] == "T + 2"
    assert run(capsys, "class", "--family", "star", "--n", "9")[1].splitlines()[0] == "0"
    code, out, _ = run(capsys, "class", "--family", "flower", "--n", "3")
    assert out.splitlines() == ["3T + 3", "3L"]
    assert run(capsys, "class", "--family", "polygon", "--n", "1")[0] == 2


def test_count(capsys):
    code, out, _ = run(capsys, "count", "--family", "banana", "--n", "3", "--q", "2", "--format", "json")
    assert code == 0
    assert json.loads(out)["result"] == {"q": 2, "total": 3, "off_sigma": 0, "on_sigma": 3}
    assert run(capsys, "count", "--family", "banana", "--n", "3", "--q", "4")[0] == 2
    assert run(capsys, "count", "--family", "banana", "--n", "12", "--q", "5")[0] == 4


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--family", "banana", "--n", "3", "--q", "2", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["pass"]
    assert data["result"]["class"]["class_value"] == data["result"]["class"]["total"] == 3
    assert data["result"]["cremona"]["pass"]

    code, out, _ = run(capsys, "verify", "--family", "polygon", "--n", "5", "--q", "3", "--format", "json")
    assert code == 0 and json.loads(out)["result"]["class"]["total"] == 40


def test_verify_displayed_variant_fails(capsys):
    code, out, _ = run(
        capsys, "verify", "--family", "banana", "--n", "3", "--q", "2", "--variant", "displayed", "--format", "json"
    )
    data = json.loads(out)
    assert code == 1 and not data["pass"]
    assert data["result"]["class"]["class_value"] == 2
    assert data["result"]["class"]["total"] == 3


def test_verify_graph_file(capsys, write):
    path = write("w.json", family("polygon", 4).to_json())
    code, out, _ = run(capsys, "verify", path, "--q", "3", "--class-coeffs", "[3, 3, 1]")
    assert code == 0 and "pass" in out
    assert run(capsys, "verify", path, "--q", "3", "--class-coeffs", "[1]")[0] == 1
    assert run(capsys, "verify", path, "--q", "3")[0] == 2


def test_irred(capsys, write):
    code, out, _ = run(capsys, "irred", write("tt.json", two_triangles().to_json()), "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["result"]["kind"] == "Reducible"
    assert data["result"]["witness"]["separating_vertex"] == 0
    assert run(capsys, "irred", "--family", "polygon", "--n", "6")[1] == "Irreducible"
    tree = Multigraph.from_pairs(3, [(0, 1), (1, 2)])
    assert run(capsys, "irred", write("t.json", tree.to_json()))[1] == "EmptyHypersurface"


def test_families(capsys):
    assert run(capsys, "families")[1].split() == ["star", "flower", "polygon", "banana"]
    code, out, _ = run(capsys, "families", "--family", "banana", "--n", "3")
    assert RotationSystem.from_json(json.loads(out)) == family_rotation("banana", 3)


def test_deterministic_output(capsys):
    args = ["verify", "--family", "banana", "--n", "4", "--q", "3", "--format", "json"]
    assert run(capsys, *args) == run(capsys, *args)


def test_report_roundtrip():
    rep = RunReport("verify", "abc", {"class": {"q": 2}}, True, {"note": "x"})
    assert RunReport.from_json(json.loads(rep.dumps())) == rep


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "graphmotive.cli", "class", "--family", "banana", "--n", "3"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[0] == "T + 2"
