import json

import pytest

from src.cli import main
from src.services.report_service import parse_reports, render_json

PERIOD_24 = "110100000011001010111100"


def test_analyze_text(capsys):
    assert main(["analyze", "1110"]) == 0
    out = capsys.readouterr().out
    assert "zcz zone: 3" in out
    assert "C_s(i+1)" in out


def test_analyze_json_round_trip(capsys):
    assert main(["analyze", PERIOD_24, "--json"]) == 0
    out = capsys.readouterr().out
    reports = parse_reports(out)
    assert reports[0].profile[12] == -20
    assert reports[0].profile[11] == 0
    assert "prop_5_3" in json.loads(out)
    assert render_json(reports) + "\n" == out


def test_analyze_run_word_literal(capsys):
    assert main(["analyze", "1:2,1,1,6,2,2,1,1,1,1,4,2", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["sequence"] == PERIOD_24


def test_analyze_file(tmp_path, capsys):
    path = tmp_path / "inputs.txt"
    path.write_text("# two inputs\n1110\n\n0000\n")
    assert main(["analyze", "--file", str(path), "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert [item["sequence"] for item in data] == ["1110", "0000"]


@pytest.mark.parametrize("argv", [["analyze", ""], ["analyze", "10x1"], ["analyze"], ["analyze", "1:1,2,3"]])
def test_analyze_bad_input(argv, capsys):
    assert main(argv) == 2
    assert "error:" in capsys.readouterr().err


def test_usage_error():
    assert main(["no-such-command"]) == 2
    assert main([]) == 2


def test_verify_exhaustive(capsys):
    assert main(["--workers", "1", "verify", "--period", "8", "--exhaustive"]) == 0
    out = capsys.readouterr().out
    assert "sequences checked: 254" in out
    assert "failures: 0" in out


def test_verify_random_is_deterministic(capsys):
    argv = ["verify", "--period", "32", "--samples", "30", "--seed", "7"]
    assert main(argv) == 0
    first = capsys.readouterr().out
    assert main(argv) == 0
    assert capsys.readouterr().out == first


def test_verify_too_large(capsys):
    assert main(["verify", "--period", "70", "--exhaustive"]) == 2
    assert "error:" in capsys.readouterr().err


def test_compositions(capsys):
    assert main(["compositions", "1"]) == 0
    assert capsys.readouterr().out == "(1)\n"
    assert main(["compositions", "3", "--duals", "3"]) == 0
    assert capsys.readouterr().out.splitlines() == [
        "(3)\t3, 4, ...",
        "(1,2)\t1, 2",
        "(2,1)\t2",
        "(1,1,1)\t1, 3, 4, ...",
    ]


def test_compositions_table_three(capsys):
    assert main(["compositions", "4", "--duals"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 8
    assert lines[5] == "(1,2,1)\t1, 2, 4, 5, ..."


def test_compositions_bad_order(capsys):
    assert main(["compositions", "0"]) == 2
    assert main(["compositions", "3", "--duals", "4"]) == 2


def test_enumerate_zcz(tmp_path, capsys):
    assert main(["--workers", "1", "enumerate-zcz", "--period", "12", "--zone", "4"]) == 0
    assert len(capsys.readouterr().out.splitlines()) == 20
    out = tmp_path / "zcz.json"
    assert main(["--workers", "1", "enumerate-zcz", "--period", "12", "--zone", "4", "--json", "--out", str(out)]) == 0
    assert json.loads(out.read_text())["count"] == 20


def test_search_hadamard(capsys):
    assert main(["--workers", "1", "search-hadamard", "--order", "4"]) == 0
    assert [line.split("\t")[0] for line in capsys.readouterr().out.splitlines()] == ["0001", "0111"]
    assert main(["--workers", "1", "search-hadamard", "--order", "8"]) == 0
    captured = capsys.readouterr()
    assert captured.out == ""
    assert "empty catalog" in captured.err


def test_diffset(capsys):
    assert main(["diffset", "--order", "7", "--set", "1,2,4"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "valid (7,3,1) difference set; constant C = -1"
    assert lines[1] == "run conditions: satisfied"


def test_diffset_invalid(capsys):
    assert main(["diffset", "--order", "7", "--set", "0,1,2"]) == 0
    assert capsys.readouterr().out.startswith("not a (7,3,1) difference set: difference 1 occurs 2 times")
    assert main(["diffset", "--order", "8", "--set", "0,1,2"]) == 2
    assert main(["diffset", "--order", "7", "--set", "a,b"]) == 2


def test_diffset_degenerate(capsys):
    assert main(["diffset", "--order", "5", "--set", ""]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].startswith("valid (5,0,")
    assert lines[1] == "degenerate: k = 0, the difference condition holds vacuously"
    assert lines[2] == "run conditions: not applicable (constant sequence)"
