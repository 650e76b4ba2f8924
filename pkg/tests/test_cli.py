import json

import pytest

from egy.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_best_json(capsys):
    code, out, _ = run(capsys, "best", "11/24", "2")
    assert code == 0
    assert json.loads(out) == {"value": "9/20", "rep": [4, 5]}


def test_greedy_json(capsys):
    code, out, _ = run(capsys, "greedy", "1/2", "1")
    assert code == 0
    assert json.loads(out)["rep"] == [3]


def test_cell_json(capsys):
    code, out, _ = run(capsys, "cell", "1", "1")
    assert code == 0
    report = json.loads(out)
    assert report["lower"] == "1/2"
    assert report["upper"] == "1"
    assert report["best_rep"] == [2]


def test_unbounded_cell(capsys):
    code, out, _ = run(capsys, "cell", "5", "2")
    assert code == 0
    assert json.loads(out)["upper"] == "+inf"


def test_cells_csv(capsys):
    code, out, _ = run(capsys, "--csv", "cells", "3/4", "1", "1")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "level,lower,upper,length,best_rep"
    assert lines[1] == "1,3/4,1,1/4,2"


def test_regular(capsys):
    code, out, _ = run(capsys, "regular", "1/2", "1")
    assert code == 0
    assert json.loads(out) == {"value": "1/2"}


def test_chain(capsys):
    code, out, _ = run(capsys, "chain", "1", "0", "4")
    assert code == 0
    report = json.loads(out)
    assert report["verdict"] == "pass"
    assert report["diffs"] == ["1/2", "1/3", "1/7", "1/43"]


def test_lemma1_report(capsys):
    code, out, _ = run(capsys, "lemma1", "50", "--mode", "exact")
    assert code == 0
    report = json.loads(out)
    assert report["pass"] is True
    assert report["i"] == 50


def test_nongreedy(capsys):
    code, out, _ = run(capsys, "nongreedy", "10")
    assert code == 0
    report = json.loads(out)
    assert set(report) == {"i", "measure", "interval_length", "ratio"}


def test_decay(capsys):
    code, out, _ = run(capsys, "decay", "1/3", "1003/3000", "31", "--imax", "1000000")
    assert code == 0
    report = json.loads(out)
    assert report["i0"] == 1001


def test_sample_deterministic(capsys):
    code1, out1, _ = run(capsys, "sample", "1", "2", "--count", "20", "--seed", "5")
    code2, out2, _ = run(capsys, "--threads", "4", "sample", "1", "2", "--count", "20", "--seed", "5")
    assert code1 == code2 == 0
    assert out1 == out2  # --threads must never change output


def test_invalid_input_exit_2(capsys):
    code, out, err = run(capsys, "best", "0", "2")
    assert code == 2
    assert out == ""
    assert "error" in err


def test_budget_exhausted_exit_3(capsys):
    code, out, err = run(capsys, "--node-budget", "2", "best", "11/24", "3")
    assert code == 3
    assert out == ""
    assert "budget" in err


def test_bad_subcommand_exit_2(capsys):
    with pytest.raises(SystemExit) as info:
        main(["frobnicate", "1", "2"])
    assert info.value.code == 2


def test_json_csv_mutually_exclusive(capsys):
    with pytest.raises(SystemExit) as info:
        main(["--json", "--csv", "best", "1/2", "1"])
    assert info.value.code == 2
