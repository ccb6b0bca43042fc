import json
import subprocess
import sys

import pytest

from bicyclic_inertia.cli import main

C5 = "5 5\n0 1 1\n1 2 1\n2 3 1\n3 4 1\n0 4 1\n"
K23 = "5 6\n0 2 1\n0 3 1\n0 4 1\n1 2 1\n1 3 1\n1 4 1\n"
DIAMOND = "4 5\n0 1 1\n0 2 1\n0 3 1\n1 2 1\n2 3 1\n"
BOWTIE = "5 6\n0 1 1\n0 2 1\n0 3 1\n0 4 1\n1 2 1\n3 4 1\n"
C4 = "4 4\n0 1 1\n1 2 1\n2 3 1\n0 3 1\n"


@pytest.fixture
def write(tmp_path):
    def _write(text, name="g.txt"):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return _write


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_inertia_examples(capsys, write):
    code, out, _ = run(capsys, "inertia", write(C5), "--method", "all")
    assert code == 0 and out.splitlines()[0] == "3 2 0" and "agreement" in out
    code, out, _ = run(capsys, "inertia", write(K23))
    assert out.splitlines()[0] == "1 1 3"
    code, out, _ = run(capsys, "inertia", write("3 0\n"))
    assert code == 0 and out.splitlines() == ["0 0 3", "rank 0"]


def test_inertia_json(capsys, write):
    code, out, _ = run(capsys, "inertia", write(C5), "--method", "all", "--json")
    doc = json.loads(out)
    assert doc["agree"] and doc["oracle"] == [3, 2, 0]


def test_inertia_parse_error(capsys, write):
    code, _, err = run(capsys, "inertia", write("2 1\n0 1 0\n"))
    assert code == 2 and "line 2" in err
    code, _, _ = run(capsys, "inertia", "/nonexistent/graph.txt")
    assert code == 2


def test_inertia_disagreement_exit(capsys, write, monkeypatch):
    from bicyclic_inertia import Inertia, cli
    monkeypatch.setitem(cli.METHODS, "oracle", lambda g: Inertia(0, 0, g.n))
    code, out, _ = run(capsys, "inertia", write(C5), "--method", "all")
    assert code == 3 and "DISAGREEMENT" in out


def test_classify_examples(capsys, write):
    code, out, _ = run(capsys, "classify", write(DIAMOND))
    assert code == 0 and "theta(1,0,1)" in out and "Thm 5.2" in out and "rank 3" in out
    code, out, _ = run(capsys, "classify", write(BOWTIE))
    assert code == 0 and "infinity(3,1,3)" in out and "Table 1" in out and "i+=2" in out
    code, _, err = run(capsys, "classify", write(C4))
    assert code == 2 and "not bicyclic" in err


def test_classify_with_pendants(capsys, write):
    code, out, _ = run(capsys, "classify", write(BOWTIE.replace("5 6", "6 7") + "0 5 1\n"))
    assert code == 0 and "pendants=yes" in out and "Thm 3.1/3.2" in out and "holds" in out


def test_census_examples(capsys):
    code, out, _ = run(capsys, "census", "--n", "5", "--grid", "1", "--filter", "rank=2")
    recs = [l for l in out.splitlines() if not l.startswith("#")]
    assert code == 0 and len(recs) == 1 and "base=theta(1,1,1)" in recs[0]
    code, out, _ = run(capsys, "census", "--n", "5", "--grid", "1")
    assert "# records=5 graphs=5" in out
    code, out, _ = run(capsys, "census", "--n", "4", "--grid", "1,2", "--filter", "i+=1")
    recs = [l for l in out.splitlines() if not l.startswith("#")]
    assert recs and all("base=theta(1,0,1)" in l for l in recs)


def test_census_deterministic_and_json(capsys, tmp_path):
    path = tmp_path / "c.json"
    _, first, _ = run(capsys, "census", "--n", "6", "--grid", "1,2", "--json", str(path))
    _, second, _ = run(capsys, "census", "--n", "6", "--grid", "2,1", "--workers", "2")
    assert first.splitlines()[2:] == second.splitlines()[2:]
    doc = json.loads(path.read_text())
    assert doc["format_version"] == 1 and doc["records"]


def test_census_bad_input(capsys):
    assert run(capsys, "census", "--n", "12")[0] == 2
    assert run(capsys, "census", "--n", "5", "--grid", "0,1")[0] == 2
    assert run(capsys, "census", "--n", "5", "--filter", "colour=red")[0] == 2


def test_bounds(capsys):
    code, out, _ = run(capsys, "bounds", "infinity", "3", "3", "--n", "7")
    assert code == 0 and "effective 3" in out and "3 3 1 [attained]" in out
    code, out, _ = run(capsys, "bounds", "theta", "1", "1", "1")
    assert "caveat" in out
    assert run(capsys, "bounds", "theta", "1", "1")[0] == 2


def test_transform(capsys, write):
    code, out, _ = run(capsys, "transform", "star-merge", write(C4), "--u", "0", "--v", "1")
    assert code == 0 and "monotone" in out
    code, out, _ = run(capsys, "transform", "path-to-star", write("1 0\n"), "--u", "0", "--v", "0")
    assert code == 0
    assert run(capsys, "transform", "path-to-star", write("1 0\n"), "--v", "0", "--weights", "1")[0] == 2


def test_derive_condition(capsys):
    code, out, _ = run(capsys, "derive-condition", "theta", "2", "0", "2", "--target", "i+=2",
                       "--holdout", "1,2,5")
    assert code == 0 and "Table 1 (i+=2)" in out and "0 mismatches" in out
    assert run(capsys, "derive-condition", "theta", "1", "0", "--target", "i+=2")[0] == 2


def test_module_entry_point(write):
    res = subprocess.run([sys.executable, "-m", "bicyclic_inertia", "inertia", write(C5)],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.startswith("3 2 0")
