# -*- coding: utf-8 -*-
import json
import logging

import pytest

from config import (
    DEFAULT_MODE,
    EXIT_AXIOM_FAILURE,
    EXIT_DIMENSION,
    EXIT_DOMAIN,
    EXIT_OK,
    EXIT_PARSE,
    EXIT_USAGE,
)
from src.cli import cli_main


def run(argv, capsys):
    code = cli_main(argv)
    return code, capsys.readouterr().out


def test_add_max_prints_w(matrix_file, capsys):
    code, out = run(["add", "--mode", "max", matrix_file("X"), matrix_file("Z")], capsys)
    assert code == EXIT_OK
    assert out == "2 2\n3+2I 13+3I\n7+9I 23+5I\n"


def test_add_min(matrix_file, capsys):
    code, out = run(["add", "--mode", "min", matrix_file("P"), matrix_file("Q")], capsys)
    assert code == EXIT_OK
    assert out == "2 2\n-8+I 5-I\n3+8I 3-2I\n"


def test_mul_plus_prints_c(matrix_file, capsys):
    code, out = run(["mul", "--reduce", "plus", matrix_file("A"), matrix_file("B")], capsys)
    assert code == EXIT_OK
    assert out == "2 4\n7 0 3+2I 7-2I\n9+2I 2+2I 5+4I 9\n"


def test_mul_tropical_max(matrix_file, capsys):
    code, out = run(["mul", "--reduce", "max", matrix_file("A"), matrix_file("B")], capsys)
    assert code == EXIT_OK
    assert out.splitlines()[1].split()[0] == "5+I"


def test_output_file(matrix_file, tmp_path, capsys):
    target = tmp_path / "W.nnm"
    code, out = run(["add", "--mode", "max", matrix_file("X"), matrix_file("Z"), "-o", str(target)], capsys)
    assert code == EXIT_OK
    assert out == ""
    assert target.read_text() == "2 2\n3+2I 13+3I\n7+9I 23+5I\n"


def test_scale(matrix_file, capsys):
    code, out = run(["scale", "--alpha", "2+I", "--mode", "min", matrix_file("P")], capsys)
    assert code == EXIT_OK
    assert out.splitlines()[1].split()[0] == "-6+2I"


@pytest.mark.parametrize("alpha, expected", [
    ("-8+I", "2 2\n-16+2I -3\n-5+9I 15-I\n"),
    ("-I", "2 2\n-8 5-2I\n3+7I 23-3I\n"),
    ("-inf", "2 2\n-inf+I -inf-I\n-inf+8I -inf-2I\n"),
])
def test_scale_by_negative_literal(matrix_file, capsys, alpha, expected):
    code, out = run(["scale", "--alpha", alpha, "--mode", "min", matrix_file("P")], capsys)
    assert code == EXIT_OK
    assert out == expected


def test_huge_power(matrix_file, capsys):
    code, out = run(["power", "--k", "1000000000", "--mode", "min", "--reduce", "min", matrix_file("S")], capsys)
    assert code == EXIT_OK
    assert out == "2 2\n0 2+I\n3-I 0\n"


def test_power_zero_is_identity(matrix_file, capsys):
    code, out = run(["power", "--k", "0", "--mode", "min", "--reduce", "min", matrix_file("P")], capsys)
    assert code == EXIT_OK
    assert out == "2 2\n0 inf+infI\ninf+infI 0\n"


def test_closure_cycle_warning(tmp_path, capsys, caplog):
    path = tmp_path / "neg.nnm"
    path.write_text("2 2\n0 -5\n1 0\n")
    with caplog.at_level(logging.WARNING):
        code, out = run(["closure", "--mode", "min", str(path)], capsys)
    assert code == EXIT_OK
    assert "CYCLE-WARNING" in caplog.text
    assert "CYCLE-WARNING" not in out
    assert out.startswith("2 2\n")


def test_paths(network_path, capsys):
    code, out = run(["paths", network_path], capsys)
    assert code == EXIT_OK
    assert out.splitlines()[1].split() == ["0", "3+I", "1+2I", "4+2I"]


def test_sched(matrix_file, capsys):
    code, out = run(["sched", "--k", "1", matrix_file("S"), matrix_file("X0")], capsys)
    assert code == EXIT_OK
    assert out == "# x(0)\n2 1\n0\n0\n# x(1)\n2 1\n2+I\n3\n"


def test_axioms_pass(capsys):
    code, out = run(["axioms", "--mode", "min", "--samples", "10000", "--seed", "7"], capsys)
    assert code == EXIT_OK
    lines = out.splitlines()
    assert len(lines) == 11
    assert lines[-1] == "overall PASS"
    assert all(line.endswith(" 10000 0") for line in lines[:-1])


def test_axioms_json_and_infinities(capsys):
    code, out = run(["axioms", "--mode", "max", "--samples", "500", "--seed", "3",
                     "--range", "-5", "5", "--infinities", "--json"], capsys)
    assert code == EXIT_OK
    document = json.loads(out)
    assert document["passed"] is True
    assert document["config"]["component_range"] == [-5, 5]


def test_axioms_strict_failure_exit(capsys):
    code, _ = run(["axioms", "--mode", "min", "--samples", "500", "--seed", "3",
                   "--infinities", "--strict"], capsys)
    assert code == EXIT_AXIOM_FAILURE


def test_cli_is_deterministic(matrix_file, capsys):
    argv = ["mul", "--reduce", "min", matrix_file("A"), matrix_file("B")]
    assert run(argv, capsys) == run(argv, capsys)


@pytest.mark.parametrize("argv", [
    [],
    ["frobnicate"],
    ["add", "--mode", "median", "a", "b"],
    ["power", "--k", "-1", "--mode", "min", "--reduce", "min", "a"],
    ["axioms", "--mode", "min", "--range", "5", "-5"],
])
def test_usage_errors(argv, capsys):
    assert cli_main(argv) == EXIT_USAGE


def test_missing_file_is_usage_error(tmp_path):
    assert cli_main(["closure", str(tmp_path / "absent.nnm")]) == EXIT_USAGE


def test_parse_error_exit(tmp_path):
    path = tmp_path / "bad.nnm"
    path.write_text("1 1\n5+\n")
    assert cli_main(["closure", str(path)]) == EXIT_PARSE


def test_dimension_error_exit(matrix_file):
    assert cli_main(["mul", "--reduce", "min", matrix_file("B"), matrix_file("A")]) == EXIT_DIMENSION


def test_non_square_power_exit(matrix_file):
    assert cli_main(["power", "--k", "2", "--mode", "min", "--reduce", "min", matrix_file("A")]) == EXIT_DIMENSION


def test_domain_error_exit(tmp_path, capsys):
    path = tmp_path / "inf.nnm"
    path.write_text("1 1\ninf\n")
    code, out = run(["scale", "--alpha", "-inf", "--mode", "min", str(path)], capsys)
    assert code == EXIT_OK
    assert out == "1 1\ninf\n"
    assert cli_main(["scale", "--alpha", "-inf", "--mode", "min", "--strict", str(path)]) == EXIT_DOMAIN


def test_graph_parse_error_exit(tmp_path):
    path = tmp_path / "graph.txt"
    path.write_text("1 1\ninf\n")
    assert cli_main(["paths", str(path)]) == EXIT_PARSE


@pytest.mark.parametrize("content", [
    "² 2\n1 2\n3 4\n".encode("utf-8"),
    b"\xff\xfe2 2\n1 2\n3 4\n",
    ("1 1\n" + "9" * 400 + "\n").encode("utf-8"),
])
def test_malformed_file_bytes_exit_with_parse_error(tmp_path, content):
    path = tmp_path / "bad.nnm"
    path.write_bytes(content)
    assert cli_main(["closure", str(path)]) == EXIT_PARSE


def test_closure_mode_defaults_to_config(matrix_file, capsys):
    default = run(["closure", matrix_file("S")], capsys)
    explicit = run(["closure", "--mode", DEFAULT_MODE, matrix_file("S")], capsys)
    assert default == explicit
    assert default[0] == EXIT_OK
