"""End-to-end command-line behavior and exit codes."""

import json
import random

import pytest

from doubleforms.cli import main
from doubleforms.serialize import dumps_canonical, form_to_dict
from doubleforms.verify import random_bianchi


@pytest.fixture
def sphere_spec(tmp_path):
    path = tmp_path / "sphere.json"
    path.write_text(dumps_canonical({"model": "constant", "n": 4, "lambda": "1"}))
    return str(path)


@pytest.fixture
def product_spec(tmp_path):
    path = tmp_path / "s2s2.json"
    path.write_text(
        dumps_canonical(
            {
                "model": "product",
                "factors": [
                    {"model": "constant", "n": 2, "lambda": "1"},
                    {"model": "constant", "n": 2, "lambda": "1"},
                ],
            }
        )
    )
    return str(path)


def test_invariants_json(sphere_spec, capsys):
    assert main(["invariants", "--spec", sphere_spec, "--max-q", "2"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["n"] == 4
    assert [row["h"] for row in payload["invariants"]] == ["6", "6"]
    assert payload["h4_sign"]["classification"] == "einstein"
    # T_2 = 3g serializes with four diagonal entries of 3
    t2 = payload["invariants"][0]["T"]
    assert [entry[2] for entry in t2["entries"]] == ["3", "3", "3", "3"]


def test_invariants_table(sphere_spec, capsys):
    assert main(["invariants", "--spec", sphere_spec, "--max-q", "1", "--format", "table"]) == 0
    out = capsys.readouterr().out
    assert "n = 4" in out and "T_2 nonzero entries:" in out


def test_pq_command(product_spec, capsys):
    assert main(["pq", "--spec", product_spec, "--p", "2", "--q", "1", "--plane", "0,1"]) == 0
    intra = json.loads(capsys.readouterr().out)["samples"][0]["value"]
    assert main(["pq", "--spec", product_spec, "--p", "2", "--q", "1", "--plane", "0,2"]) == 0
    cross = json.loads(capsys.readouterr().out)["samples"][0]["value"]
    assert (intra, cross) == ("1", "0")


def test_pq_scalar_case(sphere_spec, capsys):
    assert main(["pq", "--spec", sphere_spec, "--p", "0", "--q", "2"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["samples"][0]["value"] == "6"


def test_decompose_command(tmp_path, capsys):
    rng = random.Random("cli-decompose")
    form = random_bianchi(rng, 4, 2)
    path = tmp_path / "form.json"
    path.write_text(dumps_canonical(form_to_dict(form)))
    assert main(["decompose", "--input", str(path)]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert [tuple((c["p"], c["q"])) for c in payload["components"]] == [(0, 0), (1, 1), (2, 2)]


def test_verify_command_and_determinism(capsys):
    assert main(["verify", "--suite", "hodge", "--n", "4", "--trials", "10", "--seed", "3"]) == 0
    first = capsys.readouterr().out
    assert main(["verify", "--suite", "hodge", "--n", "4", "--trials", "10", "--seed", "3"]) == 0
    second = capsys.readouterr().out
    assert first == second
    payload = json.loads(first)
    assert payload["failures"] == 0 and payload["cases"] > 0


def test_verify_default_runs_both_parities(capsys):
    assert main(["verify", "--suite", "hodge", "--trials", "5", "--seed", "1"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert [run["n"] for run in payload["runs"]] == [4, 5]


def test_usage_errors(tmp_path, capsys):
    assert main(["verify", "--suite", "bogus", "--n", "4"]) == 2
    bad = tmp_path / "bad.json"
    bad.write_text('{"model": "constant", "n": 4, "lambda": "1/-2"}')
    assert main(["invariants", "--spec", bad.name if False else str(bad), "--max-q", "1"]) == 2
    err = capsys.readouterr().err
    assert "lambda" in err
    malformed = tmp_path / "malformed.json"
    malformed.write_text("{not json")
    assert main(["invariants", "--spec", str(malformed), "--max-q", "1"]) == 2
    missing = tmp_path / "missing.json"
    assert main(["decompose", "--input", str(missing)]) == 2
    assert main(["pq", "--spec", str(bad), "--p", "1", "--q", "1", "--plane", "x"]) == 2
    with pytest.raises(SystemExit) as exit_info:
        main(["unknown-command"])
    assert exit_info.value.code == 2


def test_plane_arity_error(product_spec):
    assert main(["pq", "--spec", product_spec, "--p", "2", "--q", "1", "--plane", "0"]) == 2


def test_cell_budget_environment_override():
    import subprocess
    import sys

    code = (
        "from doubleforms.core import cell_budget\n"
        "from doubleforms import CellBudgetError, make_zero\n"
        "assert cell_budget() == 123\n"
        "try:\n"
        "    make_zero(6, 2, 2)\n"
        "except CellBudgetError:\n"
        "    print('refused')\n"
    )
    result = subprocess.run(
        [sys.executable, "-c", code],
        capture_output=True,
        text=True,
        env={"PATH": "/usr/bin:/bin", "DOUBLEFORMS_CELL_BUDGET": "123"},
    )
    assert result.returncode == 0, result.stderr
    assert result.stdout.strip() == "refused"
