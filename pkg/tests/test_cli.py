import json

import pytest
from typer.testing import CliRunner

from app.main import app
from app.services.pbw import pbw_service
from app.services.problem import build_context, parse_problem
from app.utils.error_handling import EXIT_MATH_FAILURE, EXIT_OK, EXIT_USAGE


@pytest.fixture
def runner():
    return CliRunner(mix_stderr=False)


def invoke_json(runner, *args):
    result = runner.invoke(app, ["--json", *map(str, args)])
    return result, json.loads(result.stdout)


def test_pbw_passes_on_the_diagonal_example(runner, diagonal_file):
    result, document = invoke_json(runner, "pbw", diagonal_file)
    assert result.exit_code == EXIT_OK
    assert document["status"] == "success"
    assert document["data"]["passed"] is True
    assert document["metadata"] == {"command": "pbw", "exit_code": 0}


def test_pbw_fails_with_exit_code_one(runner, write_problem, diagonal_text):
    path = write_problem(diagonal_text.replace("kappa 1 2", "kappa 1 3"))
    result, document = invoke_json(runner, "pbw", path)
    assert result.exit_code == EXIT_MATH_FAILURE
    assert document["data"]["passed"] is False
    assert document["data"]["ls"]["violations"]


def test_check_reports_both_actions(runner, s3_file):
    result, document = invoke_json(runner, "check", s3_file, "--all")
    assert result.exit_code == EXIT_OK
    data = document["data"]
    assert data["group_order"] == 6
    assert data["q_action"]["passed"] and data["exterior_extension"]["passed"]
    assert data["q_action"]["elements_checked"] == 6


def test_cocycles_on_the_diagonal_example(runner, diagonal_file):
    result, document = invoke_json(runner, "cocycles", diagonal_file, "--threads", 1)
    assert result.exit_code == EXIT_OK
    assert document["data"]["cocycle_dimension"] == 3
    assert len(document["data"]["kappas"]) == 3


def test_cocycles_text_output_reads_back(runner, diagonal_file, diagonal_text):
    result = runner.invoke(app, ["cocycles", str(diagonal_file), "--threads", "1"])
    assert result.exit_code == EXIT_OK
    blocks, current = [], None
    for line in result.stdout.splitlines():
        if line.startswith("# kappa"):
            current = []
            blocks.append(current)
        elif line.startswith("kappa ") and current is not None:
            current.append(line)
    assert len(blocks) == 3
    header = "".join(line + "\n" for line in diagonal_text.splitlines() if not line.startswith("kappa"))
    for block in blocks:
        assert block and all(line.startswith("kappa 1 2 := ") for line in block)
        ctx = build_context(parse_problem(header + "\n".join(block) + "\n"))
        assert not ctx.kappa.is_zero()
        assert pbw_service.verdict(ctx.kappa, ctx.group, ctx.q).passed


def test_classify_symmetric_group(runner):
    result, document = invoke_json(runner, "classify", "--family", "natural", "--m", 1, "--p", 1, "--n", 4)
    assert result.exit_code == EXIT_OK
    assert document["data"]["cocycle_dimension"] == 5
    assert document["data"]["expected_dimension"] == 5


def test_classify_diagonal_needs_a_file(runner):
    result, document = invoke_json(runner, "classify", "--family", "diagonal")
    assert result.exit_code == EXIT_USAGE
    assert document["error"]["code"] == "invalid_family_spec"


def test_classify_diagonal_from_file(runner, diagonal_file):
    result, document = invoke_json(runner, "classify", "--family", "diagonal", "--file", diagonal_file)
    assert result.exit_code == EXIT_OK
    assert document["data"]["family"] == "diagonal"
    assert document["data"]["cocycle_dimension"] == 3


def test_invalid_family_parameters(runner):
    result, document = invoke_json(runner, "classify", "--family", "symplectic", "--m", 3, "--n", 3)
    assert result.exit_code == EXIT_USAGE
    assert document["error"]["code"] == "invalid_family_spec"


def test_mul_prints_the_t_expansion(runner, diagonal_file):
    result, document = invoke_json(runner, "mul", diagonal_file, "v2", "v1")
    assert result.exit_code == EXIT_OK
    assert document["data"]["product"] == "(z^1)*v1*v2 + (-1*z^1)*t*g"
    assert [term["t_power"] for term in document["data"]["expansion"]] == [0, 1]


def test_mul_in_text_mode(runner, diagonal_file):
    result = runner.invoke(app, ["mul", str(diagonal_file), "g", "v1"])
    assert result.exit_code == EXIT_OK
    assert "(z^1)*v1*g" in result.stdout


def test_diag_hh(runner, diagonal_file):
    result, document = invoke_json(runner, "diag-hh", diagonal_file, "--degree", 2, "--polycap", 0)
    assert result.exit_code == EXIT_OK
    assert document["data"]["dimension"] == 3


def test_laws_and_graded(runner, diagonal_file):
    result, document = invoke_json(runner, "laws", diagonal_file, "--degree-cap", 2)
    assert result.exit_code == EXIT_OK
    assert document["data"]["passed"] is True
    assert document["data"]["scope"] == "all"
    assert document["data"]["triples_checked"] == 818
    result, document = invoke_json(runner, "laws", diagonal_file, "--degree-cap", 2, "--generators-only")
    assert document["data"]["scope"] == "generators"
    assert document["data"]["triples_checked"] == 45
    result, document = invoke_json(runner, "graded", diagonal_file, "--degree", 3)
    assert result.exit_code == EXIT_OK
    assert document["data"]["first_deficient"] is None


def test_bb(runner):
    result, document = invoke_json(runner, "bb", "--m", 2, "--n", 3, "--c-one", 1)
    assert result.exit_code == EXIT_OK
    assert document["data"]["pbw"]["passed"] is True


def test_bb_rank_below_three_is_a_usage_error(runner):
    result, document = invoke_json(runner, "bb", "--m", 2, "--n", 2)
    assert result.exit_code == EXIT_USAGE
    assert document["error"]["code"] == "validation_error"
    assert "n" in document["error"]["message"]


def test_missing_file_is_a_usage_error(runner, tmp_path):
    result = runner.invoke(app, ["pbw", str(tmp_path / "absent.qdh")])
    assert result.exit_code == EXIT_USAGE


def test_invariant_error_exits_with_two(runner, write_problem):
    path = write_problem("field 3\ndim 2\nq 1 1 z^1\n")
    result, document = invoke_json(runner, "check", path)
    assert result.exit_code == EXIT_USAGE
    assert document["status"] == "error"
    assert document["error"]["code"] == "invariant_error"
    assert document["error"]["details"]["line"] == 3


def test_parse_error_in_text_mode(runner, write_problem):
    path = write_problem("dim 2\nq 1 2 -1\n")
    result = runner.invoke(app, ["pbw", str(path)])
    assert result.exit_code == EXIT_USAGE
    assert "line 2" in result.stderr


def test_output_is_deterministic(runner, diagonal_file):
    first = runner.invoke(app, ["--json", "cocycles", str(diagonal_file)])
    second = runner.invoke(app, ["--json", "cocycles", str(diagonal_file)])
    assert first.stdout == second.stdout


def test_json_kappa_basis_reads_back(runner, diagonal_file, diagonal_text, write_problem):
    _, document = invoke_json(runner, "cocycles", diagonal_file)
    header = "".join(line + "\n" for line in diagonal_text.splitlines() if not line.startswith("kappa"))
    for kappa in document["data"]["kappas"]:
        lines = [
            f"kappa {entry['i']} {entry['j']} := "
            + " + ".join(f"({term['coefficient']})*{term['element']}" for term in entry["terms"])
            for entry in kappa["entries"]
        ]
        path = write_problem(header + "\n".join(lines) + "\n", name="basis.qdh")
        ctx = build_context(parse_problem(path.read_text()))
        assert pbw_service.verdict(ctx.kappa, ctx.group, ctx.q).passed
        result, verdict = invoke_json(runner, "pbw", path)
        assert verdict["data"]["passed"] is True
