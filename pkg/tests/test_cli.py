import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from freevl.cli import main
from freevl.errors import ParseError
from freevl.parse import parse_sum, print_sum

GOLDEN = Path(__file__).parent / "golden"
CASES = json.loads((GOLDEN / "cases.json").read_text())


def run(argv, cwd=GOLDEN, monkeypatch=None):
    out, err = io.StringIO(), io.StringIO()
    if monkeypatch is not None:
        monkeypatch.chdir(cwd)
    code = main(argv, out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize("case", CASES, ids=[c["name"] for c in CASES])
def test_golden(case, monkeypatch):
    code, out, err = run(case["argv"], monkeypatch=monkeypatch)
    assert code == case["exit"]
    assert out == (GOLDEN / f"{case['name']}.stdout").read_text()
    assert err == (GOLDEN / f"{case['name']}.stderr").read_text()
    if code == 0 and "dot" not in case["argv"]:
        json.loads(out)
    if code != 0:
        assert out == ""


@pytest.mark.parametrize("case", CASES, ids=[c["name"] for c in CASES])
def test_sum_arguments_round_trip(case):
    for arg in case["argv"]:
        try:
            tree = parse_sum(arg)
        except ParseError:
            continue
        assert parse_sum(print_sum(tree)) == tree


def test_negative_leading_sum_is_positional(monkeypatch):
    code, out, _ = run(["canon", "-1*g1 + 2*1"], monkeypatch=monkeypatch)
    assert code == 0
    assert json.loads(out)["valuation"] == ["1", "2", "1", "2"]


def test_parse_error_position_reported(monkeypatch):
    code, out, err = run(["canon", "1*g1 & (g2"], monkeypatch=monkeypatch)
    assert code == 1 and out == ""
    assert "unbalanced parentheses" in err and "position 7" in err


def test_exit_codes_distinguish_usage_from_domain(monkeypatch):
    assert run(["nope"], monkeypatch=monkeypatch)[0] == 2
    assert run(["canon", "1*g9"], monkeypatch=monkeypatch)[0] == 1
    assert run(["cone", "1*a1", "--mode", "sideways"], monkeypatch=monkeypatch)[0] == 2


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "freevl", "canon", "1*g1 + 1*g2"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["valuation"] == ["2", "1", "1", "0"]
