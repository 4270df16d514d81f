import json
import subprocess
import sys

import pytest

from superw_kit.cli import main


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_characters_json(capsys):
    code, out, _ = run(["verify", "characters", "--n", "2", "--order", "16", "--json"], capsys)
    assert code == 0
    rep = json.loads(out)
    assert set(rep) == {"suite", "config", "checks", "duration_ms"}
    assert rep["config"] == {"n": 2, "pmax": None, "order": 16, "seed": 0}
    assert all(c["status"] == "pass" for c in rep["checks"])
    assert all(set(c) == {"name", "status", "paper_anchor"} for c in rep["checks"])


def test_failing_checks_give_exit_1_with_residual(capsys):
    code, out, _ = run(["verify", "miura", "--n", "1", "--json", "--no-timing"], capsys)
    assert code == 1
    rep = json.loads(out)
    failed = [c for c in rep["checks"] if c["status"] == "fail"]
    assert len(failed) == 1 and failed[0]["name"].startswith("as printed") and "residual" in failed[0]


def test_reports_are_byte_identical(capsys):
    argv = ["verify", "engine-axioms", "--seed", "7", "--json", "--no-timing"]
    _, a, _ = run(argv, capsys)
    _, b, _ = run(argv, capsys)
    assert a == b


def test_pp(capsys):
    assert run(["pp", "--pit", "2,2", "--max-weight", "0"], capsys)[1].strip() == "[1]"
    assert json.loads(run(["pp", "--max-weight", "5"], capsys)[1]) == [1, 1, 3, 6, 13, 24]


def test_bracket_heisenberg(capsys):
    code, out, _ = run(["bracket", "--algebra", "heis:1", "--lhs", "t", "--rhs", "t"], capsys)
    assert code == 0 and out.strip() == "((eps + 1)/eps) lambda"


def test_bracket_presets(capsys):
    assert run(["bracket", "--algebra", "gl:1,1", "--lhs", "e12", "--rhs", "e21"], capsys)[0] == 0
    assert run(["bracket", "--algebra", "ux:1", "--lhs", "u1", "--rhs", "|1,0,1>"], capsys)[1].strip() == "((eps + 1)/eps) |1,0,1>"
    code, out, _ = run(["bracket", "--algebra", "gl32", "--lhs", "J", "--rhs", "s1+", "--json"], capsys)
    assert code == 0 and json.loads(out) == {"0": "s1+"}


@pytest.mark.parametrize("argv", [
    ["bracket", "--algebra", "heis:1", "--lhs", "t +", "--rhs", "t"],
    ["bracket", "--algebra", "nope", "--lhs", "t", "--rhs", "t"],
    ["verify", "bogus"],
    ["pp", "--pit", "2", "--max-weight", "3"],
    ["series", "macmahon"],
    [],
])
def test_usage_errors_exit_2(argv, capsys):
    code, _, err = run(argv, capsys)
    assert code == 2 and err


def test_parse_error_is_position_annotated(capsys):
    _, _, err = run(["bracket", "--algebra", "heis:1", "--lhs", "t +", "--rhs", "t"], capsys)
    assert "position 3" in err and "^" in err


def test_series(capsys):
    code, out, _ = run(["series", "center-character", "--order", "6", "--n", "1", "--json"], capsys)
    assert code == 0
    assert [c for _, c in json.loads(out)["coeffs"]] == ["1", "1", "3", "6", "12", "21", "38"]
    assert run(["series", "gl32-character", "--order", "2"], capsys)[1].startswith("1 + q + 2*q^(3/2)")


def test_miura(capsys):
    code, out, _ = run(["miura", "--n", "1", "--pmax", "1", "--critical"], capsys)
    assert code == 0 and out.strip() == "W_1 = -u1 - u2"


def test_list(capsys):
    code, out, _ = run(["list"], capsys)
    assert code == 0 and "gl32_images" in out and "engine-axioms" in out


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "superw_kit.cli", "pp", "--max-weight", "2"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "[1, 1, 3]"
