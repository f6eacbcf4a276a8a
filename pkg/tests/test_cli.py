import json

import pytest

from polybern.cli import main

TABLE1_CSV = """n\\k,0,1,2,3,4,5
0,1,1,1,1,1,1
1,1,2,4,8,16,32
2,1,4,14,46,146,454
3,1,8,46,230,1066,4718
4,1,16,146,1066,6902,41506
5,1,32,454,4718,41506,329462
"""


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_table_csv(capsys):
    code, out, _ = run(capsys, "table", "--seq", "B", "--nmax", "5", "--kmax", "5", "--format", "csv")
    assert code == 0 and out == TABLE1_CSV


def test_table_json_strings(capsys):
    code, out, _ = run(capsys, "table", "--seq", "D", "--nmax", "2", "--kmax", "2", "--format", "json")
    assert json.loads(out)["rows"] == [["1", "0", "0"], ["0", "1", "1"], ["0", "1", "5"]]


def test_verify_ok_and_deterministic(capsys):
    code1, out1, _ = run(capsys, "verify", "--nmax", "3", "--kmax", "3")
    code8, out8, _ = run(capsys, "verify", "--nmax", "3", "--kmax", "3", "--jobs", "4")
    assert code1 == code8 == 0
    assert out1 == out8
    assert json.loads(out1)["ok"]


def test_verify_budget_exit(capsys):
    code, _, err = run(capsys, "verify", "--nmax", "5", "--kmax", "5", "--families", "orientation")
    assert code == 3 and "budget" in err


def test_verify_unknown_family(capsys):
    code, _, _ = run(capsys, "verify", "--families", "tarot")
    assert code == 2


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as e:
        main(["table", "--bogus"])
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        main(["table", "--seq", "B", "--nmax", "-1"])
    assert e.value.code == 2


def test_bijections(capsys):
    code, out, _ = run(capsys, "bijections", "--check", "--max-total", "5")
    assert code == 0 and json.loads(out)["ok"]
    assert run(capsys, "bijections")[0] == 2


def test_transform(capsys):
    code, out, _ = run(capsys, "transform", "--rule", "at", "--seed", "bernoulli", "--n", "4")
    d = json.loads(out)
    assert code == 0 and d["edge"] == ["1", "1/2", "1/6", "0", "-1/30"]
    assert run(capsys, "transform", "--rule", "bt", "--seed", "nope", "--n", "2")[0] == 2


def test_chromatic(capsys):
    code, out, _ = run(capsys, "chromatic", "--n", "1", "--k", "2", "--eval", "3", "--coeff", "1", "--derive-at", "1")
    d = json.loads(out)
    assert d["poly"] == "q^3 - 2*q^2 + q"
    assert d["eval"]["value"] == "12" and d["coeff"]["value"] == "1" and d["derivative"]["value"] == "0"


def test_diagonal_and_conjecture(capsys):
    code, out, _ = run(capsys, "diagonal", "--seq", "C", "--nmax", "7")
    assert [s["value"] for s in json.loads(out)["sums"]] == ["1", "2", "5", "16", "63", "294", "1585"]
    code, out, _ = run(capsys, "conjecture", "--nmax", "7")
    reps = json.loads(out)
    assert [r["diag_sum"] for r in reps] == ["1", "2", "4", "10", "32", "126", "588", "3170"]
    assert all(r["equal"] for r in reps)


def test_oeis_offline(capsys, tmp_path):
    code, out, _ = run(capsys, "oeis", "--seq", "A099594", "--offline", "--cache-dir", str(tmp_path))
    assert code == 0 and json.loads(out)["ok"]
