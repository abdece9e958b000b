import csv
import io
import json
import subprocess
import sys

import pytest

from kshapes import cli
from kshapes.verify import Report


def run(capsys, *argv):
    code = cli.run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_list_shapes(capsys):
    code, out, _ = run(capsys, "kshapes", "list", "--k", "3", "--n", "5")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 10
    assert lines == sorted(lines, key=lambda s: tuple(int(x) for x in s.split(",")))


def test_empty_shape_prints_a_dash(capsys):
    _, out, _ = run(capsys, "kshapes", "list", "--k", "2", "--n", "0")
    assert out == "-\n"


def test_dot_export(capsys):
    code, out, _ = run(capsys, "poset", "dot", "--k", "2", "--n", "4")
    assert code == 0
    edges = [line for line in out.splitlines() if "->" in line]
    assert len(edges) == 6
    assert all('label="r"' in e or 'label="c"' in e for e in edges)
    assert all("charge=" in e for e in edges)
    assert out.startswith("digraph")


def _rows(text):
    return {(r["mu"], r["lambda"]): r["poly"] for r in csv.DictReader(io.StringIO(text))}


def test_branch_tables(capsys):
    code, out, _ = run(capsys, "branch", "--k", "2", "--degree", "2", "--graded")
    assert code == 0
    assert _rows(out)[("1,1", "2")] == "t"
    _, out, _ = run(capsys, "branch", "--k", "6", "--degree", "6", "--graded")
    assert _rows(out)[("5,1", "6")] == "t"
    _, out, _ = run(capsys, "branch", "--k", "2", "--degree", "3")
    assert _rows(out)[("1,1,1", "2,1")] == "1"


def test_branch_json(capsys):
    _, out, _ = run(capsys, "branch", "--k", "3", "--degree", "4", "--graded", "--format", "json")
    doc = json.loads(out)
    assert doc["schema"] == 1 and doc["conjectural"] is True
    assert {"mu": "1,1,1,1", "lambda": "2,2", "poly": "t^2"} in doc["entries"]


def test_expand(capsys):
    code, out, _ = run(capsys, "expand", "dkr", "--k", "2", "--shape", "4,3,2,1")
    assert code == 0
    doc = json.loads(out)
    assert doc["symmetric"] is True
    assert doc["weak_decomposition"] == [{"core": "4,3,2,1", "count": 1}]
    code, out, _ = run(capsys, "expand", "homology", "--k", "2", "--shape", "4,3,2,1", "--graded")
    doc = json.loads(out)
    assert {"core": "3,1,1", "poly": "t^2+t^3"} in doc["kschur_coefficients"]
    code, out, _ = run(capsys, "expand", "dkr", "--k", "3", "--shape", "2,1", "--allow-rank-k", "--format", "text")
    assert code == 0 and "allow_rank_k: True" in out


def test_usage_errors(capsys):
    assert run(capsys, "expand", "dkr", "--k", "4", "--shape", "3,3,1")[0] == 2
    assert run(capsys, "kshapes", "list", "--k", "1", "--n", "2")[0] == 2
    assert run(capsys, "branch", "--k", "5", "--degree", "3")[0] == 2
    assert run(capsys, "expand", "dkr", "--k", "3", "--shape", "1,2")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys)[0] == 2


def test_verify_small(capsys):
    code, out, _ = run(capsys, "verify", "roundtrip", "--k", "2", "--n", "4")
    assert code == 0 and out.strip().startswith("PASS")
    code, out, _ = run(capsys, "verify", "tables", "--n", "3")
    assert code == 0 and "PASS" in out
    code, out, _ = run(capsys, "verify", "bijection", "--k", "2", "--n", "3", "-v")
    assert code == 0 and "pairs=" in out


def test_verify_failure_exit_code(capsys, monkeypatch):
    def broken(degrees):
        r = Report("branching tables", checked=1)
        r.fail("made up")
        return r

    monkeypatch.setattr(cli.suites, "verify_tables", broken)
    code, out, _ = run(capsys, "verify", "tables")
    assert code == 1 and "FAIL" in out


def test_output_is_deterministic(capsys):
    a = run(capsys, "branch", "--k", "3", "--degree", "5", "--graded")[1]
    b = run(capsys, "branch", "--k", "3", "--degree", "5", "--graded")[1]
    assert a == b
    c = run(capsys, "poset", "dot", "--k", "3", "--n", "5")[1]
    d = run(capsys, "poset", "dot", "--k", "3", "--n", "5")[1]
    assert c == d


@pytest.mark.slow
def test_module_entry_point():
    done = subprocess.run(
        [sys.executable, "-m", "kshapes", "kshapes", "list", "--k", "2", "--n", "4"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert done.returncode == 0
    assert len(done.stdout.splitlines()) == 6
