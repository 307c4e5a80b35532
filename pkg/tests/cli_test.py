"""Tests for the command-line interface."""

from __future__ import annotations

import csv
import io
import json
import math
from pathlib import Path

import pytest
from click.testing import CliRunner

from poncelet.cli import main
from poncelet.dependencies.config import config_dependency

C1 = ["--R", "2", "--c", "1"]
F1 = ["--scenario", "focus", "--R", "2.5", "--c", "1"]


def parse_csv(output: str) -> list[dict[str, str]]:
    """Parse CSV command output into a list of rows."""
    return list(csv.DictReader(io.StringIO(output)))


def test_help() -> None:
    runner = CliRunner()
    result = runner.invoke(main, ["-h"], catch_exceptions=False)
    assert result.exit_code == 0
    assert "Commands:" in result.output

    result = runner.invoke(main, ["help"], catch_exceptions=False)
    assert result.exit_code == 0
    assert "Commands:" in result.output

    result = runner.invoke(main, ["help", "family"], catch_exceptions=False)
    assert result.exit_code == 0
    assert "sweep" in result.output

    result = runner.invoke(main, ["help", "unknown-command"])
    assert result.exit_code != 0
    assert "Unknown help topic unknown-command" in result.output


def test_family_check() -> None:
    runner = CliRunner()
    result = runner.invoke(
        main, ["family", "check", *C1], catch_exceptions=False
    )
    assert result.exit_code == 0
    values = {row["name"]: row["value"] for row in parse_csv(result.output)}
    assert values["scenario"] == "center"
    assert values["conic_kind"] == "ellipse"
    assert values["family_kind"] == "all_acute"
    assert float(values["arc_length"]) == pytest.approx(math.tau)


def test_family_sample() -> None:
    runner = CliRunner()
    result = runner.invoke(
        main,
        ["family", "sample", *C1, "--theta", str(math.pi / 2)],
        catch_exceptions=False,
    )
    assert result.exit_code == 0
    (row,) = parse_csv(result.output)
    assert float(row["ay"]) == pytest.approx(2.0)
    assert float(row["bx"]) == pytest.approx(-1.854049, abs=1e-6)
    assert float(row["cy"]) == pytest.approx(-0.75)


def test_family_sweep_general() -> None:
    runner = CliRunner()
    result = runner.invoke(
        main,
        [
            "family",
            "sweep",
            "--scenario",
            "general",
            "--R",
            "2",
            "--c",
            "1",
            "--center",
            "0.3",
            "0",
            "--n",
            "10",
        ],
        catch_exceptions=False,
    )
    assert result.exit_code == 0
    assert len(parse_csv(result.output)) == 10

    result = runner.invoke(
        main, ["family", "sweep", "--scenario", "general", *C1]
    )
    assert result.exit_code == 2
    assert "--center" in result.output


def test_family_inadmissible() -> None:
    runner = CliRunner()
    result = runner.invoke(
        main,
        ["family", "sample", "--R", "0.7", "--c", "1", "--theta", "0"],
    )
    assert result.exit_code == 2
    assert "inadmissible_vertex" in result.output


def test_invariants() -> None:
    runner = CliRunner()
    result = runner.invoke(
        main,
        ["invariants", "sweep", *F1, "--n", "24"],
        catch_exceptions=False,
    )
    assert result.exit_code == 0
    rows = parse_csv(result.output)
    assert all(row["verdict"] == "invariant" for row in rows)

    result = runner.invoke(
        main, ["invariants", "expected", *F1], catch_exceptions=False
    )
    assert result.exit_code == 0
    values = {row["name"]: row["value"] for row in parse_csv(result.output)}
    assert float(values["sin2_sum"]) == pytest.approx(2.09)
    assert float(values["ah_bh_ch"]) == pytest.approx(5.625)


def test_construct() -> None:
    runner = CliRunner()
    vertices = [
        "--vertex",
        "1",
        "2",
        "--vertex",
        "-2",
        "1",
        "--vertex",
        "2",
        "0",
    ]
    result = runner.invoke(
        main, ["construct", "oh-conic", *vertices], catch_exceptions=False
    )
    assert result.exit_code == 0
    values = {row["name"]: row["value"] for row in parse_csv(result.output)}
    assert values["kind"] == "hyperbola"
    assert float(values["center_x"]) == pytest.approx(15 / 28)

    result = runner.invoke(
        main, ["construct", "steiner", *vertices], catch_exceptions=False
    )
    assert result.exit_code == 0
    values = {row["name"]: row["value"] for row in parse_csv(result.output)}
    assert float(values["inellipse_center_x"]) == pytest.approx(1 / 3)

    result = runner.invoke(main, ["construct", "inellipse", *vertices[:6]])
    assert result.exit_code == 2
    assert "exactly three" in result.output

    result = runner.invoke(
        main, ["construct", "steiner", "--vertex", "nan", "0", *vertices[3:]]
    )
    assert result.exit_code == 2
    assert "invalid_input" in result.output


def test_sequence() -> None:
    runner = CliRunner()
    result = runner.invoke(
        main,
        ["sequence", "orbit", "--x0", "0.4", "--n", "2"],
        catch_exceptions=False,
    )
    assert result.exit_code == 0
    rows = parse_csv(result.output)
    assert [float(row["x"]) for row in rows] == pytest.approx([0.4, 0.872])

    result = runner.invoke(
        main,
        ["sequence", "iterate", "--c", "1", "--R", "2.5", "--n", "2"],
        catch_exceptions=False,
    )
    assert result.exit_code == 0
    rows = parse_csv(result.output)
    assert float(rows[1]["c"]) == pytest.approx(109 / 9)

    result = runner.invoke(
        main, ["sequence", "iterate", "--c", "1", "--R", "2", "--n", "3"]
    )
    assert result.exit_code == 2
    assert "step,c,R,x,beta_sign\n" in result.output
    assert "singular_iteration" in result.output


def test_sequence_homothety() -> None:
    runner = CliRunner()
    result = runner.invoke(
        main,
        [
            "sequence",
            "homothety",
            "--vertex",
            "0",
            "0",
            "--vertex",
            "2",
            "0",
            "--vertex",
            "0.6",
            "1.7",
            "--ratio",
            "-0.5",
            "--n",
            "2",
        ],
        catch_exceptions=False,
    )
    assert result.exit_code == 0
    rows = parse_csv(result.output)
    assert [float(row["ratio"]) for row in rows] == [-0.5, 0.25]


def test_extremal() -> None:
    runner = CliRunner()
    result = runner.invoke(main, ["extremal", *F1], catch_exceptions=False)
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data["schema_version"] == 1
    assert data["command"] == "extremal"
    assert data["max"]["area"] == pytest.approx(6.840539, abs=1e-6)
    assert data["min"]["area"] == pytest.approx(5.176193, abs=1e-6)
    assert data["pedal_points"] == []
    assert set(data["max_tangency_ratios"]) == {"ab", "bc", "ca"}

    result = runner.invoke(
        main,
        ["extremal", "--scenario", "focus", "--R", "1.5", "--c", "1"],
        catch_exceptions=False,
    )
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data["min"] is None
    assert len(data["pedal_points"]) == 2

    result = runner.invoke(
        main,
        ["extremal", "--scenario", "center", "--R", "0.7", "--c", "1"],
        catch_exceptions=False,
    )
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data["max"]["area"] == pytest.approx(0.200671, abs=1e-6)
    assert data["min"] is None


def test_extremal_general() -> None:
    runner = CliRunner()
    result = runner.invoke(
        main,
        ["extremal", "--scenario", "general", *C1, "--center", "0.3", "0"],
    )
    assert result.exit_code == 2
    assert "unsupported_scenario" in result.output


def test_locus(tmp_path: Path) -> None:
    runner = CliRunner()
    out = tmp_path / "cassini.svg"
    result = runner.invoke(
        main,
        [
            "locus",
            "cassini",
            "--R",
            "1",
            "--c",
            "1",
            "--n",
            "32",
            "--format",
            "svg",
            "--out",
            str(out),
        ],
        catch_exceptions=False,
    )
    assert result.exit_code == 0
    assert result.output == ""
    assert out.read_text().count("<polygon") == 2

    result = runner.invoke(
        main,
        ["locus", "orthic", "--R", "1.5", "--c", "1", "--n", "16"],
        catch_exceptions=False,
    )
    assert result.exit_code == 0
    assert len(parse_csv(result.output)) == 16

    result = runner.invoke(
        main, ["locus", "tangential", *F1], catch_exceptions=False
    )
    assert result.exit_code == 0
    values = {row["name"]: row["value"] for row in parse_csv(result.output)}
    assert float(values["circle0_radius"]) == pytest.approx(125 / 9)


def test_tolerance_option() -> None:
    runner = CliRunner()
    result = runner.invoke(
        main,
        ["--tol", "1e-6", "family", "check", *C1],
        catch_exceptions=False,
    )
    assert result.exit_code == 0
    assert config_dependency.config().tolerance == 1e-6

    result = runner.invoke(main, ["--tol", "0.5", "family", "check", *C1])
    assert result.exit_code == 2


def test_config_path(tmp_path: Path) -> None:
    path = tmp_path / "poncelet.yaml"
    path.write_text("outputPrecision: 6\n")
    runner = CliRunner()
    result = runner.invoke(
        main,
        [
            "--config-path",
            str(path),
            "family",
            "sample",
            *C1,
            "--theta",
            str(math.pi / 2),
        ],
        catch_exceptions=False,
    )
    assert result.exit_code == 0
    (row,) = parse_csv(result.output)
    assert row["bx"] == "-1.85405"
