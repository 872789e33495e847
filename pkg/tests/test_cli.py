import json

import pytest

from asmdpp.cli import main
from asmdpp.harness import golden_n2
from asmdpp.laurent import parse_json, parse_text


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_count_asm(capsys):
    assert run(capsys, "count", "asm", "--n", "3") == (0, "7\n", "")


@pytest.mark.parametrize("sel", ["dpp", "sbcspp", "pairs", "paths"])
def test_count_other_sides(capsys, sel):
    code, out, _ = run(capsys, "count", sel, "--n", "2")
    assert code == 0
    assert int(out) == {"dpp": 2, "sbcspp": 18, "pairs": 18, "paths": 18}[sel]


def test_gf_sign_specialization(capsys):
    assert run(capsys, "gf", "amt", "--bottom", "1,2", "--specialize", "sign")[:2] == (0, "2\n")


def test_verify_main2_prints_table_twice(capsys):
    code, out, _ = run(capsys, "verify", "main2", "--n", "2")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 2 and lines[0] == lines[1]
    assert parse_text(lines[0], 2) == golden_n2()


@pytest.mark.parametrize("sel", ["amt", "closed", "sbcspp", "lgv", "paths", "mt", "damt", "pairs", "bcspp"])
def test_gf_json_round_trip(capsys, sel):
    code, out, _ = run(capsys, "gf", sel, "--n", "2", "--format", "json")
    assert code == 0
    p = parse_json(out)
    assert p.serialize("json").decode() == out.strip()
    code, text, _ = run(capsys, "gf", sel, "--n", "2")
    assert parse_text(text.strip(), 2) == p


def test_deterministic_output(capsys):
    a = run(capsys, "enumerate", "sbcspp", "--n", "2", "--format", "json")
    b = run(capsys, "enumerate", "sbcspp", "--n", "2", "--format", "json")
    assert a == b and a[0] == 0


def test_weights_file(capsys, tmp_path):
    table = tmp_path / "w.json"
    table.write_text(json.dumps([{"s": 0, "t": 1, "coeff": "u"}, {"s": 1, "t": 0, "coeff": "2"}]))
    closed = run(capsys, "gf", "closed", "--bottom", "0,1", "--weights", str(table))
    rec = run(capsys, "gf", "amt", "--bottom", "0,1", "--weights", str(table))
    assert closed == rec and closed[0] == 0


def test_empty_weight(capsys):
    closed = run(capsys, "gf", "closed", "--bottom", "2,1", "--empty-weight", "X3")
    rec = run(capsys, "gf", "amt", "--bottom", "2,1", "--empty-weight", "X3")
    assert closed == rec and closed[0] == 0
    assert "X3" in closed[1]


def test_assign(capsys):
    code, out, _ = run(capsys, "gf", "amt", "--bottom", "1", "--assign", "u=1,v=1,w=1,X1=2")
    assert (code, out) == (0, "7\n")


def test_biject(capsys):
    code, out, _ = run(capsys, "biject", "asm", "--input", "[[0,1,0],[1,-1,1],[0,1,0]]")
    assert (code, json.loads(out)) == (0, [[2], [1, 3], [1, 2, 3]])
    code, out, _ = run(capsys, "biject", "mt", "--input", "[[2],[1,3],[1,2,3]]")
    assert json.loads(out) == [[0, 1, 0], [1, -1, 1], [0, 1, 0]]
    code, out, _ = run(capsys, "biject", "dpp", "--n", "7", "--input", "[[7,6,6,5,5],[5,5,4,4],[3,3],[2]]")
    fam = json.loads(out)
    assert [p["i"] for p in fam["paths"]] == [2, 3, 5, 7]
    code, out, _ = run(capsys, "biject", "paths", "--input", json.dumps(fam))
    assert json.loads(out) == [[7, 6, 6, 5, 5], [5, 5, 4, 4], [3, 3], [2]]
    code, out, _ = run(capsys, "biject", "sbcspp", "--input", '{"filling":[[[2],[2],[2]],[[1]]]}')
    assert json.loads(out) == [[2]]
    code, out, _ = run(capsys, "biject", "sbcspp", "--to", "pairs", "--input", '{"filling":[[[2],[2],[2]],[[1]]]}')
    pair = out.strip()
    code, out, _ = run(capsys, "biject", "pairs", "--input", pair)
    assert json.loads(out)["filling"] == [[[2], [2], [2]], [[1]]]


@pytest.mark.parametrize(
    "argv",
    [
        ["count", "lgv", "--n", "2"],
        ["verify", "bogus"],
        ["count", "asm"],
        ["gf", "amt", "--bottom", "a,b"],
        ["frobnicate"],
        ["gf", "closed", "--n", "6"],
        ["biject", "sbcspp", "--input", "not json"],
        ["biject", "sbcspp", "--input", '{"filling":[[[2],[1]]]}'],
        ["gf", "lgv", "--n", "-1"],
    ],
)
def test_usage_errors(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_verify_named_checks(capsys):
    assert run(capsys, "verify", "prop26", "--n", "3")[0] == 0
    assert run(capsys, "verify", "bn_det", "--n", "2")[:2] == (0, "bn_det n=2: ok\n")


def test_verify_all_report(capsys):
    code, out, _ = run(capsys, "verify", "all", "--max-n", "2")
    report = json.loads(out)
    assert code == 0 and report["passed"] and len(report["checks"]) == 10


def test_verify_failure_exit_code(capsys, monkeypatch):
    import asmdpp.harness as h

    monkeypatch.setitem(h.CHECKS, "golden", (3, "t", lambda max_n: (False, "difference: v^3")))
    code, out, _ = run(capsys, "verify", "golden", "--n", "2")
    assert code == 1 and "FAILED" in out
