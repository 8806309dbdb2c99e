"""Artifact files, simplicial ingestion, and the command line."""

import json

import pytest

from quivhom.cli import main
from quivhom.cubical import CubicalSet
from quivhom.files import (ParseError, SimplicialComplexInput,
                           data_to_artifact, load_artifact, save_artifact,
                           simplicial_to_digraph)
from quivhom.quiver import Quiver, build_quiver, is_simple

TRIANGLE_DATA = {
    "type": "cubical_set",
    "cubes": [
        {"id": "v0", "dim": 0}, {"id": "v1", "dim": 0}, {"id": "v2", "dim": 0},
        {"id": "i", "dim": 1,
         "faces": {"1-": {"gen": "v0"}, "1+": {"gen": "v1"}}},
        {"id": "j", "dim": 1,
         "faces": {"1-": {"gen": "v1"}, "1+": {"gen": "v2"}}},
        {"id": "k", "dim": 1,
         "faces": {"1-": {"gen": "v0"}, "1+": {"gen": "v2"}}},
    ],
}

Q517_DATA = {
    "type": "quiver",
    "vertices": ["v0", "v1", "v2"],
    "arrows": [{"id": "a1", "src": "v0", "tgt": "v1"},
               {"id": "a2", "src": "v0", "tgt": "v1"},
               {"id": "b1", "src": "v1", "tgt": "v2"},
               {"id": "b2", "src": "v1", "tgt": "v2"}],
}


def _write(tmp_path, name, data):
    path = tmp_path / name
    path.write_text(json.dumps(data))
    return str(path)


def test_load_quiver_and_cubical(tmp_path):
    q = load_artifact(_write(tmp_path, "q.json", Q517_DATA))
    assert isinstance(q, Quiver)
    assert len(q.vertices) == 3 and len(q.arrows) == 4
    k = load_artifact(_write(tmp_path, "k.json", TRIANGLE_DATA))
    assert isinstance(k, CubicalSet)
    assert k.max_dim == 1


def test_round_trip(tmp_path):
    for name, data in (("q.json", Q517_DATA), ("k.json", TRIANGLE_DATA),
                       ("s.json", {"type": "simplicial",
                                   "facets": [["0", "1"], ["1", "2"]]})):
        first = load_artifact(_write(tmp_path, name, data))
        save_artifact(first, tmp_path / ("rt_" + name))
        second = load_artifact(tmp_path / ("rt_" + name))
        assert first == second
        save_artifact(second, tmp_path / ("rt2_" + name))
        assert (tmp_path / ("rt_" + name)).read_text() == \
            (tmp_path / ("rt2_" + name)).read_text()


def test_parse_errors(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(ParseError) as err:
        load_artifact(str(bad))
    assert "line" in str(err.value)
    with pytest.raises(ParseError):
        data_to_artifact({"type": "mystery"})
    dangling = {"type": "cubical_set", "cubes": [
        {"id": "e", "dim": 1,
         "faces": {"1-": {"gen": "missing"}, "1+": {"gen": "missing"}}}]}
    with pytest.raises(ValueError) as err:
        data_to_artifact(dangling)
    assert "missing" in str(err.value)


def test_simplicial_to_digraph_counts():
    edge = SimplicialComplexInput((("0", "1"),))
    g = simplicial_to_digraph(edge)
    assert len(g.vertices) == 3 and len(g.arrows) == 2
    hollow = SimplicialComplexInput((("0", "1"), ("1", "2"), ("0", "2")))
    g = simplicial_to_digraph(hollow)
    assert len(g.vertices) == 6 and len(g.arrows) == 6
    full = SimplicialComplexInput((("0", "1", "2"),))
    g = simplicial_to_digraph(full)
    assert len(g.vertices) == 7 and len(g.arrows) == 9
    assert is_simple(g)


def test_simplicial_validation():
    with pytest.raises(ValueError):
        SimplicialComplexInput(())
    with pytest.raises(ValueError):
        SimplicialComplexInput((("0", "0"),))


# -- command line -------------------------------------------------------------

def test_cli_validate_and_homology(tmp_path, capsys):
    kfile = _write(tmp_path, "k.json", TRIANGLE_DATA)
    assert main(["validate", kfile]) == 0
    assert main(["homology", "cubical", kfile, "--max-dim", "2"]) == 0
    out = capsys.readouterr().out
    assert "betti: 1 1 0" in out


def test_cli_homology_json(tmp_path, capsys):
    qfile = _write(tmp_path, "q.json", Q517_DATA)
    assert main(["homology", "mpath", qfile, "--power", "2",
                 "--max-dim", "2", "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["betti"] == [1, 0, 1]
    assert report["chain_ranks"] == [3, 4, 3]
    assert report["valid_up_to"] == 2


def test_cli_refuses_unreliable_degrees(tmp_path, capsys):
    qfile = _write(tmp_path, "q.json",
                   {"type": "quiver", "vertices": ["0", "1"],
                    "arrows": [{"id": "a", "src": "0", "tgt": "1"}]})
    assert main(["homology", "cell", qfile, "--word", "+",
                 "--max-dim", "2"]) == 0
    out = capsys.readouterr().out
    assert "valid up to degree: 1" in out
    assert "betti: 1 0\n" in out  # degree 2 not printed


def test_cli_pipeline_realize_then_path(tmp_path, capsys):
    kfile = _write(tmp_path, "k.json", TRIANGLE_DATA)
    gfile = str(tmp_path / "g.json")
    assert main(["realize", kfile, "--word", "+", "-o", gfile]) == 0
    assert main(["homology", "path", gfile, "--max-dim", "2"]) == 0
    out = capsys.readouterr().out
    assert "betti: 1 0 0" in out


def test_cli_singular_output(tmp_path):
    qfile = _write(tmp_path, "q.json",
                   {"type": "quiver", "vertices": ["0", "1"],
                    "arrows": [{"id": "a", "src": "0", "tgt": "1"}]})
    sfile = str(tmp_path / "s.json")
    assert main(["singular", qfile, "--word", "++", "--max-dim", "1",
                 "-o", sfile]) == 0
    k = load_artifact(sfile)
    assert isinstance(k, CubicalSet)
    assert [len(layer) for layer in k.gens] == [2, 2]


def test_cli_ingest_simplicial(tmp_path, capsys):
    sfile = _write(tmp_path, "s.json",
                   {"type": "simplicial", "facets": [["0", "1", "2"]]})
    gfile = str(tmp_path / "g.json")
    assert main(["ingest", "simplicial", sfile, "-o", gfile]) == 0
    assert main(["homology", "path", gfile, "--max-dim", "3"]) == 0
    out = capsys.readouterr().out
    assert "betti: 1 0 0 0" in out


def test_cli_exit_codes(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{]")
    assert main(["validate", str(bad)]) == 1
    kfile = _write(tmp_path, "k.json", TRIANGLE_DATA)
    assert main(["homology", "cubical-path", kfile, "--word", "+"]) == 2
    assert main(["homology", "path", kfile]) == 2  # wrong artifact kind
    assert main(["nonsense"]) == 2
    qfile = _write(tmp_path, "q.json", Q517_DATA)
    assert main(["homology", "path", qfile]) == 1  # not simple
    assert main(["homology", "mpath", qfile, "--field", "f:5"]) == 2
    capsys.readouterr()
