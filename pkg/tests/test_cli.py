"""Unit tests for the command-line front end."""

import json

from braidties.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_dim(capsys):
    code, out, _ = run(capsys, "dim", "--n", "3")
    assert code == 0 and out.strip() == "30"
    code, out, _ = run(capsys, "dim", "--n", "4", "--json")
    assert code == 0 and json.loads(out) == {"n": 4, "dimension": 360}


def test_basis(capsys):
    code, out, _ = run(capsys, "basis", "--n", "2", "--json")
    report = json.loads(out)
    assert code == 0 and report["size"] == 4
    assert "1" in report["basis"] and "E{1,2}*T1" in report["basis"]


def test_eval_and_roundtrip(capsys):
    code, out, _ = run(capsys, "eval", "--n", "2", "--expr", "T1*T1")
    assert code == 0
    assert out.strip() == "1 + (u - 1)*E{1,2} + (u - 1)*E{1,2}*T1"
    # the printed form re-evaluates to itself
    code, out2, _ = run(capsys, "eval", "--n", "2", "--expr", out.strip())
    assert code == 0 and out2 == out


def test_eval_parse_error(capsys):
    code, _, err = run(capsys, "eval", "--n", "2", "--expr", "T9")
    assert code == 2 and "position" in err


def test_guard(capsys):
    code, _, err = run(capsys, "specht", "--n", "5")
    assert code == 2 and "guard" in err


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--n", "2")
    assert code == 0 and "all pass" in out
    code, out, _ = run(capsys, "verify", "--n", "2", "--tensor", "--json")
    assert code == 0 and json.loads(out)["pass"]


def test_specht(capsys):
    code, out, _ = run(capsys, "specht", "--n", "2", "--json")
    report = json.loads(out)
    assert code == 0 and report["sumSquares"] == 4
    code, out, _ = run(capsys, "specht", "--n", "2", "--label", "1", "--json")
    assert code == 0 and json.loads(out)["dim"] == 1
    code, _, err = run(capsys, "specht", "--n", "2", "--label", "9")
    assert code == 2


def test_faithful(capsys):
    code, out, _ = run(capsys, "faithful", "--n", "2", "--json")
    report = json.loads(out)
    assert code == 0 and report["rank"] == 4


def test_gram(capsys):
    code, out, _ = run(capsys, "gram", "--n", "2", "--u1", "--json")
    report = json.loads(out)
    assert code == 0 and report["full_rank"] and report["rank"] == 4
    code, out, _ = run(capsys, "gram", "--n", "2", "--at", "3/2", "--json")
    assert code == 0 and json.loads(out)["at"] == "3/2"
    code, _, err = run(capsys, "gram", "--n", "2", "--at", "zzz")
    assert code == 2


def test_moebius(capsys):
    code, out, _ = run(capsys, "moebius", "--n", "3", "--json")
    report = json.loads(out)
    assert code == 0 and report["pass"]
    assert len(report["entries"]) == 5


def test_labels(capsys):
    code, out, _ = run(capsys, "labels", "--n", "3", "--json")
    report = json.loads(out)
    assert code == 0 and report["count"] == 8
