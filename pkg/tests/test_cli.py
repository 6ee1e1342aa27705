import json

import pytest

from structree import corpus
from structree.cli import CommandConfig, main
from structree.errors import PreconditionError

C4 = str(corpus.corpus_dir() / "c4.json")
EDGE = str(corpus.corpus_dir() / "single_edge.txt")


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_build_summary(capsys, tmp_path):
    code, out, _ = run(capsys, "build", "--input", C4, "--out", str(tmp_path / "t.json"), "--dot", str(tmp_path / "t.dot"))
    assert code == 0
    assert out == "tree vertices: 5\ntree edges: 4\nnon-image vertices: 1\n"
    assert json.loads((tmp_path / "t.json").read_text())["nu"]["1"] == 0
    assert (tmp_path / "t.dot").read_text().startswith("graph structure_tree")


def test_build_single_edge_to_stdout(capsys):
    code, out, err = run(capsys, "build", "--input", EDGE, "--json")
    assert code == 0
    assert len(json.loads(out)["vertices"]) == 2
    assert json.loads(err) == {"tree_vertices": 2, "tree_edges": 1, "non_image": 0}


def test_fig2_queries(capsys):
    assert run(capsys, "query", "flow", "u", "p", "--corpus", "fig2", "--limit", "22")[1] == "12\n"
    code, out, _ = run(capsys, "query", "cut", "u", "p", "--corpus", "fig2", "--limit", "22", "--json")
    assert json.loads(out)["cut"] == ["q", "r", "s", "t", "u", "v", "w"]


def test_query_cut_single_edge(capsys):
    assert run(capsys, "query", "cut", "a", "b", "--input", EDGE)[1] == "a\n"


def test_exit_codes(capsys, tmp_path, monkeypatch):
    assert run(capsys, "query", "flow", "1", "9", "--input", C4)[0] == 2
    assert run(capsys, "query", "flow", "1", "1", "--input", C4)[0] == 2
    bad = tmp_path / "bad.txt"
    bad.write_text("a b 1\nb c\n")
    code, _, err = run(capsys, "build", "--input", str(bad))
    assert code == 2 and "line 2" in err
    assert run(capsys, "build", "--corpus", "fig2")[0] == 3
    monkeypatch.setenv("STRUCTREE_LIMIT", "3")
    assert run(capsys, "build", "--input", C4)[0] == 3
    assert run(capsys, "build", "--input", C4, "--limit", "4", "--out", str(tmp_path / "x.json"))[0] == 0


def test_limit_must_be_at_least_two():
    with pytest.raises(PreconditionError):
        CommandConfig(input=C4, limit=1)


def test_gomory_hu_and_factors(capsys):
    code, out, _ = run(capsys, "gomory-hu", "--input", C4)
    assert code == 0 and out == "2 3 2\n2 4 2\n1 2 2\n"
    code, out, _ = run(capsys, "factors", "--input", C4, "--vertex", "1", "--json")
    f = json.loads(out)["factors"][0]
    assert f["label"] == "*0" and f["nu"] == [] and len(f["rho"]) == 4 and f["connected"]


def test_expr(capsys):
    assert run(capsys, "expr", "1", "3", "--input", C4)[1] == "1 3\n"
    assert run(capsys, "expr", "1", "3", "--input", C4, "--twig", "largest")[1] == "1 3\n"


def test_dump_cuts(capsys):
    doc = json.loads(run(capsys, "dump-cuts", "--input", C4)[1])
    assert doc["levels"][0]["capacity"] == 2 and len(doc["levels"][0]["cuts"]) == 6


def test_verify_ok(capsys):
    code, out, _ = run(capsys, "verify", "--corpus", "random1", "--seed", "3")
    assert code == 0 and "FAILED" not in out


def test_verify_gomory_hu_mode(capsys):
    code, out, _ = run(capsys, "verify", "--corpus", "petersen", "--suite", "gomory-hu", "--json")
    assert code == 0 and json.loads(out) == {"ok": True, "suites": {"gomory-hu": []}}


def test_verify_corrupted_tree(capsys, tmp_path):
    good = tmp_path / "t.json"
    run(capsys, "build", "--input", C4, "--out", str(good))
    doc = json.loads(good.read_text())
    doc["edges"][0]["c"] = 3
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "verify", "--input", C4, "--suite", "flow", "--tree", str(bad))
    assert code == 1
    assert "tree-file: FAILED" in out and "capacity 3" in out
    assert run(capsys, "verify", "--input", C4, "--suite", "flow", "--tree", str(good))[0] == 0


def test_build_deterministic(capsys, tmp_path):
    for k in (1, 2):
        run(capsys, "build", "--corpus", "random3", "--out", str(tmp_path / f"{k}.json"), "--dot", str(tmp_path / f"{k}.dot"))
    assert (tmp_path / "1.json").read_bytes() == (tmp_path / "2.json").read_bytes()
    assert (tmp_path / "1.dot").read_bytes() == (tmp_path / "2.dot").read_bytes()
