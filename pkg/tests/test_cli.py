import json
import subprocess
import sys

import pytest

from e6verify import cli, report


def test_list(capsys):
    assert cli.main(["list"]) == 0
    out = capsys.readouterr().out
    assert "lemma4.1" in out and "sec3.rank3" in out


def test_verify_one(tmp_path, capsys):
    path = tmp_path / "r.json"
    assert cli.main(["verify", "lemma4.1", "--json", str(path)]) == 0
    rep = json.loads(path.read_text())
    assert list(rep) == ["version", "claims"]
    (c,) = rep["claims"]
    assert list(c) == ["claim_id", "paper_anchor", "verdict", "witness", "stats"]
    assert c["claim_id"] == "lemma4.1" and c["verdict"] == "verified"
    assert c["stats"]["elapsed_ms"] < 5000


def test_unknown_claim():
    with pytest.raises(SystemExit) as exc:
        cli.main(["verify", "nonexistent"])
    assert exc.value.code == 2


def test_certificate_invariants():
    with pytest.raises(ValueError):
        report.Certificate("x", "y", report.REFUTED, None)
    with pytest.raises(ValueError):
        report.Certificate("x", "y", "maybe")


def test_refuted_claim_exit_status(monkeypatch, capsys):
    def broken(opts):
        return False, {"order": {"got": 1, "expected": 2}}, {}
    monkeypatch.setitem(report.CLAIMS, "weyl.order", ("stub", broken))
    assert cli.main(["verify", "weyl.order"]) == 1
    assert "refuted" in capsys.readouterr().out


def test_error_verdict(monkeypatch):
    def boom(opts):
        raise RuntimeError("kaput")
    monkeypatch.setitem(report.CLAIMS, "weyl.order", ("stub", boom))
    (c,) = report.run("weyl.order")
    assert c.verdict == report.ERROR and "kaput" in c.witness["exception"]


def test_census(tmp_path, capsys):
    path = tmp_path / "c.json"
    assert cli.main(["census", "w_e6_order3", "--json", str(path)]) == 0
    rep = json.loads(path.read_text())
    assert set(rep["types"]) == {"A2", "A2xA2", "A2xA2xA2"}
    assert [r["fixed_lines"] for r in rep["types"].values()] == [9, 0, 0]
    assert "A2xA2xA2" in capsys.readouterr().out


def _dot_counts(text):
    lines = text.splitlines()
    nodes = [l for l in lines if l.strip().startswith('"') and "--" not in l]
    edges = [l for l in lines if "--" in l]
    return len(nodes), len(edges)


@pytest.mark.parametrize("graph,nodes,edges", [("lines27", 27, 135), ("hexagon", 6, 6), ("ag23", 21, 36)])
def test_export(tmp_path, graph, nodes, edges):
    path = tmp_path / f"{graph}.dot"
    assert cli.main(["export", graph, "--out", str(path)]) == 0
    text = path.read_text()
    assert _dot_counts(text) == (nodes, edges)
    assert text == report.graph_dot(graph)


def test_export_unwritable(tmp_path):
    assert cli.main(["export", "hexagon", "--out", str(tmp_path / "missing" / "x.dot")]) == 1


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "e6verify", "verify", "sec6.hexagon"],
                         capture_output=True, text=True)
    assert out.returncode == 0
    assert "1/1 claims verified" in out.stdout
