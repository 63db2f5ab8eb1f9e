import json

import pytest

from src.algebra.exactpoly import to_scalar
from src.algebra.interp import InterpolationError
from src.algebra.partitions import Partition
from src.core.config import Config
from src.interfaces import cli
from src.interfaces.cli import dumps, parse_args, run_subcommand


@pytest.fixture
def config():
    return Config.defaults()


def test_dumps_is_compact_and_sorted():
    assert dumps({"b": 1, "a": "∅"}) == '{"a":"∅","b":1}'


def test_parse_args_reflect_uses_lambda_flag():
    args = parse_args(["reflect", "--p", "1", "--q", "2", "--lambda", "1,1"])
    assert args.command == "reflect"
    assert args.lam == "1,1"


def test_interp_json(capsys, config):
    assert run_subcommand(["interp", "--p", "1", "--q", "1", "--mu", "2"], config) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["degenerate"] is False
    assert payload["extra_vanishing_failures"] == []
    assert {"exp": [4, 0], "coef": "1/16"} in payload["poly"]["terms"]


def test_interp_table_is_csv(capsys, config):
    assert run_subcommand(["interp", "--p", "1", "--q", "1", "--table", "1"], config) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "mu\\lambda,∅,(1)"


def test_non_hook_is_invalid_input(capsys, config):
    assert run_subcommand(["interp", "--p", "1", "--q", "1", "--mu", "2,2"], config) == 2
    assert "error:" in capsys.readouterr().err


def test_half_given_parameters_rejected(config):
    assert run_subcommand(["interp", "--p", "1", "--q", "1", "--mu", "1", "--k", "-3"], config) == 2


def test_usage_error():
    assert run_subcommand(["interp", "--p", "1"]) == 2


def test_brackets(capsys, config):
    assert run_subcommand(["--format", "text", "brackets", "--check-table"], config) == 0
    out = capsys.readouterr().out
    assert out.startswith("64/64 pass")
    assert "super-Jacobi failures: 0" in out


def test_reflect_text(capsys, config):
    assert run_subcommand(["--format", "text", "reflect", "--p", "1", "--q", "2", "--lambda", "1,1"], config) == 0
    out = capsys.readouterr().out
    assert "case = ii  tau = 1  l = 1" in out


def test_kac_quasi_needs_the_family(config):
    assert run_subcommand(["kac", "--a", "2", "--b", "0", "--quasi"], config) == 2


def test_kac_spherical(capsys, config):
    assert run_subcommand(["kac", "--a", "2", "--b", "0"], config) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["hw"] == [2, 0, -1, -1]
    assert payload["spherical_dim"] == 1
    assert payload["typical"] is True


def test_output_file(tmp_path, capsys, config):
    out = tmp_path / "basis.json"
    assert run_subcommand(["--out", str(out), "basis", "--p", "1", "--q", "1", "--degree", "2"], config) == 0
    assert capsys.readouterr().out == ""
    payload = json.loads(out.read_text(encoding="utf-8"))
    assert payload["dim"] == payload["hooks"] == 4


def test_shimura_degree_bound(config):
    assert run_subcommand(["shimura", "--mu", "4"], config) == 2


def test_verify_single_suite(capsys, config):
    assert run_subcommand(["verify-all", "--suite", "roots"], config) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["ok"] is True
    assert [s["suite"] for s in payload["suites"]] == ["roots"]


def test_interp_vanishing_failure_exits_one(monkeypatch, capsys, config):
    monkeypatch.setattr(cli, "verify_extra_vanishing", lambda res, mu, prof, slack: [(Partition((3,)), to_scalar(1))])
    assert run_subcommand(["interp", "--p", "1", "--q", "1", "--mu", "2"], config) == 1
    payload = json.loads(capsys.readouterr().out)
    assert payload["extra_vanishing_failures"] == ["(3):1"]


def test_interpolation_error_is_a_solver_failure(monkeypatch, capsys, config):
    def unsolvable(mu, prof, slack):
        raise InterpolationError(f"Solution space for {mu} is still 2-dimensional", 2)

    monkeypatch.setattr(cli, "solve_interpolation", unsolvable)
    assert run_subcommand(["interp", "--p", "1", "--q", "1", "--mu", "2"], config) == 1
    assert "2-dimensional" in capsys.readouterr().err
