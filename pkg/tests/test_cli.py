import csv
import io
import json

import pytest

from permsolv import cli
from permsolv.graphs import parse_json


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_info(capsys):
    code, out, _ = run(capsys, "info", "S:4", "--format", "json")
    info = json.loads(out)
    assert code == 0
    assert (info["order"], info["solvable"], info["nilpotent"], info["radical_order"]) == (24, True, False, 24)
    code, out, _ = run(capsys, "info", "PSL2:7", "--format", "json")
    info = json.loads(out)
    assert info["order"] == 168 and not info["solvable"] and info["radical_order"] == 1
    assert info["sylow_orders"] == {"2": 8, "3": 3, "7": 7}


def test_info_over_cap_is_partial(capsys):
    code, out, _ = run(capsys, "info", "M:11", "--cap", "100", "--format", "json")
    info = json.loads(out)
    assert code == 0 and info["order"] == 7920 and "error" in info["class_count"]
    code, out, _ = run(capsys, "info", "A:5")
    assert "radical_order" in out and "60" in out


def test_graph_commands(capsys, tmp_path):
    out_path = tmp_path / "s3.dot"
    code, _, _ = run(capsys, "graph", "S:3", "--kind", "class", "--relation", "solvable",
                     "--format", "dot", "--out", str(out_path))
    dot = out_path.read_text()
    assert code == 0 and dot.count(" -- ") == 1 and dot.count("[label=") == 2
    code, out, _ = run(capsys, "graph", "C:4", "--relation", "commuting")
    g = parse_json(out)
    assert code == 0 and g.n == 3 and g.is_complete()
    assert not list(tmp_path.glob(".permsolv-*"))


@pytest.mark.parametrize(
    "argv",
    [
        ["graph", "S:3", "--kind", "class", "--relation", "generating"],
        ["graph", "S:3", "--relation", "commuting", "--format", "csv"],
        ["verify", "--spec", "S:3", "--check", "nope"],
        ["table", "Z"],
        ["table", "B", "--range", "3..9"],
        ["table", "B", "--range", "9..5"],
        ["info", "S:4", "--format", "dot"],
        ["info", "S:4", "--cap", "0"],
        ["info", "X:4"],
        [],
    ],
)
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 1 and err.startswith("permsolv:")


def test_verify_single_check(capsys):
    code, out, _ = run(capsys, "verify", "--spec", "A:5", "--check", "solvable-criterion")
    reps = json.loads(out)
    assert code == 0 and len(reps) == 1
    assert reps[0]["outcome"] == "witness-found" and reps[0]["stats"]["millis"] == 0


def test_verify_skips_over_cap(capsys):
    code, out, _ = run(capsys, "verify", "--spec", "M:11", "--check", "star,baer-suzuki",
                       "--cap", "1000", "--format", "text")
    assert code == 0 and out.count("exceeds enumeration cap") == 2 and "summary: skipped=2" in out


def test_verify_manifest_and_determinism(capsys, tmp_path):
    m = tmp_path / "m.txt"
    m.write_text("S:3\nA:4  # tetrahedral\n")
    argv = ["verify", "--manifest", str(m), "--check", "star", "--check", "nilpotent-criterion"]
    code1, out1, _ = run(capsys, *argv)
    code2, out2, _ = run(capsys, *argv)
    assert code1 == code2 == 0 and out1 == out2
    assert len(json.loads(out1)) == 4
    _, timed, _ = run(capsys, *argv, "--timing")
    assert len(json.loads(timed)) == 4


def test_verify_inconsistent_exit_code(capsys, monkeypatch):
    from permsolv import harness

    def broken(ctx, spec, cfg):
        return harness.VerdictReport(spec, "star", "inconsistent")

    monkeypatch.setitem(harness.CHECKS, "star", broken)
    code, _, _ = run(capsys, "verify", "--spec", "S:3", "--check", "star")
    assert code == 2


def test_table_b(capsys, tmp_path):
    path = tmp_path / "b.csv"
    code, _, _ = run(capsys, "table", "B", "--range", "22..26", "--format", "csv", "--out", str(path))
    rows = list(csv.DictReader(io.StringIO(path.read_text())))
    assert code == 0
    assert {"n": "24", "status": "EMPTY"}.items() <= rows[[r["n"] for r in rows].index("24")].items()
    pairs = {(r["n"], r["order"], r["centralizer"]) for r in rows if r["status"] == "found"}
    assert ("23", "11", "121") in pairs and ("22", "19", "57") in pairs


def test_table_c_and_d(capsys):
    code, out, _ = run(capsys, "table", "C-subset", "--format", "json")
    rows = json.loads(out)
    assert code == 0
    found = {(r["group"], r["order"], r["centralizer"]) for r in rows if r["status"] == "found"}
    assert {("PSL2:7", 3, 3), ("PSL2:11", 5, 5), ("PSL3:3", 3, 9)} <= found
    code, out, _ = run(capsys, "table", "D-m11", "--format", "json")
    (row,) = json.loads(out)
    assert row["outcome"] == "consistent" and row["observed_orders"] == "660 7920"


def test_write_atomic_replaces(tmp_path):
    p = tmp_path / "x.txt"
    p.write_text("old")
    cli.write_atomic(p, "new")
    assert p.read_text() == "new"
    assert [q.name for q in tmp_path.iterdir()] == ["x.txt"]
