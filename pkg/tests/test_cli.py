import json

import pytest

from sympoly.cli import run, to_jsonable
from sympoly.graph import Graph, cycle_graph, wheel_graph


@pytest.fixture
def c4(tmp_path):
    p = tmp_path / "c4.json"
    p.write_text(json.dumps(cycle_graph(4).to_json()))
    return str(p)


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip().startswith("{") else out)


def test_facets_count_only(capsys, c4):
    assert call(capsys, "facets", c4, "--count-only") == (0, {"count": 6})


def test_facets_fvector(capsys, c4):
    code, data = call(capsys, "facets", c4, "--fvector")
    assert code == 0 and data["fvector"] == [8, 12, 6] and len(data["facets"]) == 6


def test_volume_and_triangulation_file(capsys, c4, tmp_path):
    out = tmp_path / "tri.json"
    code, data = call(capsys, "volume", c4, "--triangulation", str(out))
    assert code == 0 and data["volume"] == 12
    tri = json.loads(out.read_text())
    assert sum(len(t["simplices"]) for t in tri) == 12


def test_hstar_and_dualpoints(capsys, c4):
    assert call(capsys, "hstar", c4)[1] == {"ehrhart": [1, 3, 3, 2], "hstar": [1, 5, 5, 1],
                                            "gamma": [1, 2], "volume": 12}
    assert call(capsys, "dualpoints", c4)[1] == {"count": 19}
    assert call(capsys, "dualpoints-mobius", c4)[1] == {"count": 19}


def test_flows_on_multigraph(capsys, tmp_path):
    p = tmp_path / "dual.txt"
    p.write_text("0 1\n0 1\n0 1\n0 1\n")
    assert call(capsys, "flows", str(p), "--k", "2")[1] == {"k": 2, "count": 6}


def test_gj(capsys):
    code, data = call(capsys, "gj", "--alphabet", "3", "--bad", "+-,-+,000", "--orders", "5")
    assert data["series"] == [1, 3, 7, 16, 36, 82]
    assert data["genfun"] == {"num": [-1, -2, -2, -1], "den": [-1, 1, 2, 2]}
    code, data = call(capsys, "gj", "--alphabet", "3", "--bad", "+-,-+,000", "--cyclic", "--orders", "7")
    assert data["series"] == [1, 3, 7, 14, 26, 62, 138, 310]


def test_family(capsys):
    assert call(capsys, "family", "wheel", "--n", "5")[1] == {"facets": 62, "volume": 152}
    assert call(capsys, "family", "outerplanar", "--a", "2,2,2,2,3", "--s", "3", "--t", "3")[1] == \
        {"facets": 25920, "volume": 1244160}
    assert call(capsys, "family", "join-odd", "--i", "1", "--j", "2")[1] == {"volume": 84}
    assert call(capsys, "family", "cycle", "--k", "3")[1]["fvector"] == [12, 60, 120, 90, 20]


def test_big_numbers_become_strings(capsys):
    data = call(capsys, "family", "wheel", "--n", "60")[1]
    assert isinstance(data["volume"], str) and int(data["volume"]) > 2 ** 53
    assert to_jsonable(2 ** 53 - 1) == 2 ** 53 - 1


def test_kr(capsys, c4):
    code, data = call(capsys, "kr", c4, "--subset", "0,2", "--verify")
    assert data["equal"] is True
    assert data["generators"] == [["1/2", 0, "-1/2", 0], ["-1/2", 0, "1/2", 0]]


def test_errors(capsys, tmp_path):
    p = tmp_path / "dis.json"
    p.write_text(json.dumps({"n": 3, "edges": [[0, 1]]}))
    code, data = call(capsys, "facets", str(p))
    assert code == 1 and data["error"] == "DisconnectedGraph"
    assert run(["nonsense"]) == 2
    assert run(["family", "wheel"]) == 2
    capsys.readouterr()


def test_round_trip_of_emitted_graph(capsys, tmp_path):
    g = wheel_graph(4)
    p = tmp_path / "w.json"
    p.write_text(json.dumps(g.to_json()))
    first = call(capsys, "volume", str(p))[1]
    q = tmp_path / "w2.json"
    q.write_text(json.dumps(Graph.from_json(json.loads(p.read_text())).to_json()))
    assert call(capsys, "volume", str(q))[1] == first


def test_report_and_pretty(capsys, c4):
    code, data = call(capsys, "--report", "facets", c4, "--count-only")
    assert data["command"] == "facets" and data["outputs"] == {"count": 6}
    code, text = call(capsys, "--pretty", "hstar", c4)
    assert "hstar: [1, 5, 5, 1]" in text


def test_verify_subset(capsys):
    code, data = call(capsys, "verify", "--suite", "paper", "--criteria", "1,8")
    assert code == 0 and data["passed"] and [c["criterion"] for c in data["criteria"]] == [1, 8]
