#!/usr/bin/env python

"""
Command line interface, driven through typer's test runner.
"""

import re
import pytest
from loguru import logger
from typer.testing import CliRunner
from conftest import read_rows
from unruhcoh import __version__
from unruhcoh.__main__ import app

RUNNER = CliRunner()


@pytest.fixture(autouse=True)
def quiet_logger():
    "The CLI enables logging to the runner's stderr; undo after each test."
    yield
    logger.remove()
    logger.disable("unruhcoh")


def _invoke(*args):
    return RUNNER.invoke(app, list(args))


def test_version():
    result = _invoke("--version")
    assert result.exit_code == 0
    assert __version__ in result.output


def test_coherence_ghz_analytic():
    result = _invoke(
        "coherence", "--family", "ghz", "--theta", "0.7854",
        "--accel", "2:2.0", "--mode", "analytic")
    assert result.exit_code == 0, result.output
    (row,) = read_rows(result.output).to_dict("records")
    assert row["c_total_analytic"] == pytest.approx(0.8988, abs=5e-4)
    assert row["c_local_analytic"] == 0.0
    assert row["r1"] == 2.0


def test_coherence_both_paths():
    result = _invoke("coherence", "--family", "w-sym", "--accel", "2:1.0")
    assert result.exit_code == 0, result.output
    (row,) = read_rows(result.output).to_dict("records")
    assert row["c_total_numeric"] == pytest.approx(row["c_total_analytic"], abs=1e-6)
    assert row["tail_bound"] <= 1e-10
    assert int(row["n_max"]) > 0


def test_coherence_inertial_values():
    result = _invoke("coherence", "--family", "w-sym")
    assert read_rows(result.output)["c_total_numeric"][0] == pytest.approx(2.0, abs=1e-12)
    result = _invoke("coherence", "--family", "star", "--accel", "central:0")
    assert result.exit_code == 0, result.output
    data = read_rows(result.output)
    assert data["family"][0] == "star[central]"
    assert data["c_total_analytic"][0] == pytest.approx(3.0)


def test_coherence_omega_and_reduce():
    result = _invoke(
        "coherence", "--family", "w", "--theta", "0.6283", "--phi", "0.6283",
        "--accel", "2:0.5", "--omega", "--reduce", "BC")
    assert result.exit_code == 0, result.output
    data = read_rows(result.output)
    assert data["c_total_numeric"][0] == pytest.approx(data["c_total_analytic"][0], abs=1e-6)
    assert data["c_local_numeric"][0] == pytest.approx(0.0, abs=1e-12)


@pytest.mark.parametrize("args", [
    ["--family", "ghzz"],
    ["--family", "ghz"],
    ["--family", "ghz", "--theta", "0.5", "--accel", "2:abc"],
    ["--family", "ghz", "--theta", "0.5", "--accel", "7:1.0"],
    ["--family", "ghz", "--theta", "0.5", "--accel", "central:1.0"],
    ["--family", "ghz", "--theta", "0.5", "--tail-tol", "2"],
    ["--family", "ghz", "--theta", "0.5", "--accel", "0:1,1:1,2:1", "--mode", "analytic"],
])
def test_usage_errors(args):
    assert _invoke("coherence", *args).exit_code == 2


def test_budget_is_runtime_error():
    result = _invoke(
        "coherence", "--family", "ghz", "--theta", "0.5", "--accel", "2:2.0",
        "--mode", "numeric", "--max-terms", "10")
    assert result.exit_code == 1


def test_sweep_inertial_constants(tmp_path):
    out = tmp_path / "wwbar.csv"
    result = _invoke(
        "sweep", "--family", "wwbar", "--accel", "2", "--grid", "0:0:1",
        "--out", str(out))
    assert result.exit_code == 0, result.output
    data = read_rows(out.read_text())
    assert data["c_total_numeric"][0] == pytest.approx(5.0, abs=1e-12)
    assert data["c_global_analytic"][0] == pytest.approx(37 / 27)
    assert data["c_local_numeric"][0] == pytest.approx(98 / 27, abs=1e-12)


def test_sweep_is_deterministic(tmp_path):
    args = ["sweep", "--family", "ghz", "--theta-grid", "0:1.5:3",
            "--accel", "1,2", "--grid", "0:1:3", "--grid2", "0.5:1:2"]
    first = _invoke(*args, "--out", str(tmp_path / "a.csv"))
    second = _invoke(*args, "--out", str(tmp_path / "b.csv"))
    assert first.exit_code == second.exit_code == 0
    text = (tmp_path / "a.csv").read_text()
    assert text == (tmp_path / "b.csv").read_text()
    assert len(read_rows(text)) == 18


def test_sweep_network(tmp_path):
    result = _invoke(
        "sweep", "--family", "w-n", "--N", "5", "--n-accel", "0,1,2",
        "--grid", "1:1:1", "--normalized", "--mode", "analytic")
    assert result.exit_code == 0, result.output
    data = read_rows(result.output)
    assert list(data["n_accel"]) == [0, 1, 2]
    assert data["c_total_analytic"][0] == pytest.approx(1.0)


def test_sweep_bad_grid():
    result = _invoke("sweep", "--family", "w-sym", "--accel", "2", "--grid", "0:1")
    assert result.exit_code == 2


def test_sweep_checks_every_grid_point(tmp_path):
    out = tmp_path / "ghz.csv"
    result = _invoke(
        "sweep", "--family", "ghz", "--theta-grid", "0:7:3", "--accel", "2",
        "--grid", "1:1:1", "--mode", "analytic", "--out", str(out))
    assert result.exit_code == 2
    assert not out.exists()
    result = _invoke(
        "compare", "--family", "ghz", "--theta-grid", "0:7:3", "--accel", "2",
        "--grid", "1:1:1")
    assert result.exit_code == 2


def test_unreachable_tolerance_is_runtime_error():
    result = _invoke(
        "coherence", "--family", "ghz", "--theta", "0.7854", "--accel", "2:400")
    assert result.exit_code == 1
    assert not isinstance(result.exception, ZeroDivisionError)
    assert "cap" in result.output


def test_compare_passes():
    result = _invoke(
        "compare", "--family", "star", "--accel", "peripheral", "--grid", "0.25:1.5:3")
    assert result.exit_code == 0, result.output
    match = re.search(r"max_deviation=(\S+) tolerance=(\S+) points=(\d+)", result.output)
    assert match
    assert float(match.group(1)) <= float(match.group(2))
    assert int(match.group(3)) == 3


def test_compare_detects_truncation():
    result = _invoke(
        "compare", "--family", "ghz", "--theta", "0.7854", "--accel", "2",
        "--grid", "2:2:1", "--n-max", "3")
    assert result.exit_code == 1


def test_compare_needs_one_source():
    assert _invoke("compare").exit_code == 2
    assert _invoke("compare", "--family", "ghz", "--preset", "fig3a").exit_code == 2


def test_preset_output():
    result = _invoke("preset", "--preset", "fig9b")
    assert result.exit_code == 0, result.output
    assert "# preset=fig9b" in result.output
    data = read_rows(result.output)
    assert len(data) == 44
    assert set(data["family"]) == {"ghz-n", "w-n"}


def test_preset_unwritable_path(tmp_path):
    result = _invoke(
        "preset", "--preset", "fig9b", "--out", str(tmp_path / "missing" / "x.csv"))
    assert result.exit_code == 1
