import json
import sys
from pathlib import Path

import pytest
from click.testing import CliRunner
from loguru import logger

from minimal_surfaces.interfaces.cli import cli
from minimal_surfaces.test.helpers import STANDARD_CONFIG


@pytest.fixture(autouse=True)
def restore_logging():
    yield
    logger.remove()
    logger.add(sys.stderr)


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


def _variant(tmp_path: Path, **replacements: str) -> Path:
    text = STANDARD_CONFIG.read_text()
    for old, new in replacements.items():
        text = text.replace(old, new)
    text = text.replace('"output/', f'"{tmp_path.as_posix()}/')

    path = tmp_path / "run.toml"
    path.write_text(text)

    return path


def test_multiplier_default(runner: CliRunner) -> None:
    result = runner.invoke(cli, ["multiplier"])

    assert result.exit_code == 0
    assert "(2+√13)/3" in result.stdout
    assert json.loads(result.stdout)["verdict"] == "pass"


def test_multiplier_without_admissible_root(runner: CliRunner) -> None:
    result = runner.invoke(cli, ["multiplier", "--m1", "1"])

    assert result.exit_code == 1
    assert "m2_solvable" in result.stdout


def test_multiplier_rejects_irrational_input(runner: CliRunner) -> None:
    assert runner.invoke(cli, ["multiplier", "--m1", "pi"]).exit_code == 2


def test_verify_standard(runner: CliRunner, tmp_path: Path) -> None:
    out = tmp_path / "report.json"

    result = runner.invoke(cli, ["verify", "--config", str(STANDARD_CONFIG), "--out", str(out)])

    assert result.exit_code == 0, result.output
    report = json.loads(out.read_text())
    assert report["verdict"] == "pass"
    assert {"psi_conformality", "no_real_periods", "gauss_clearance"} <= {check["name"] for check in report["checks"]}


def test_verify_rejects_even_k(runner: CliRunner, tmp_path: Path) -> None:
    result = runner.invoke(cli, ["verify", "--config", str(STANDARD_CONFIG), "--k", "2", "--out", str(tmp_path / "r.json")])

    assert result.exit_code == 2


def test_verify_rejects_coincident_punctures(runner: CliRunner, tmp_path: Path) -> None:
    config = _variant(tmp_path, **{"beta = [0.0, 3.0]": "beta = [2.0, 0.0]"})

    assert runner.invoke(cli, ["verify", "--config", str(config)]).exit_code == 2


def test_missing_config(runner: CliRunner, tmp_path: Path) -> None:
    assert runner.invoke(cli, ["verify", "--config", str(tmp_path / "absent.toml")]).exit_code == 2


def test_probe_rejects_increasing_epsilons(runner: CliRunner) -> None:
    result = runner.invoke(cli, ["probe", "--config", str(STANDARD_CONFIG), "--eps", "1e-3", "--eps", "1e-2"])

    assert result.exit_code == 2


def test_probe_toward_alpha(runner: CliRunner) -> None:
    result = runner.invoke(cli, ["probe", "--config", str(STANDARD_CONFIG), "--target", "alpha"])

    assert result.exit_code == 0, result.output
    assert json.loads(result.stdout)["values"]["probe"]["verdict"] == "diverges"


def test_mesh_is_byte_identical_on_rerun(runner: CliRunner, tmp_path: Path) -> None:
    config = _variant(tmp_path, **{"n_r = 64": "n_r = 6", "n_theta = 256": "n_theta = 24"})
    first, second = tmp_path / "first.obj", tmp_path / "second.obj"

    for mesh_path in (first, second):
        result = runner.invoke(cli, ["mesh", "--config", str(config), "--mesh-path", str(mesh_path)])
        assert result.exit_code == 0, result.output

    assert first.read_bytes() == second.read_bytes()
    assert "# kind=quotient" in first.read_text()


def test_coeffs_dumps_every_series(runner: CliRunner) -> None:
    result = runner.invoke(cli, ["coeffs", "--config", str(STANDARD_CONFIG)])

    assert result.exit_code == 0, result.output
    values = json.loads(result.stdout)["values"]
    assert values["k"] == 3
    assert len(values["base"]) == len(values["psi"]) == 3
    assert values["base"][0]["band"] == 48
    assert len(values["base"][0]["coeffs"]) == 97
    assert values["multiplier"]["0"] == "0"


def test_mesh_is_not_written_when_verification_fails(runner: CliRunner, tmp_path: Path) -> None:
    config = _variant(tmp_path, **{"harmonicity = 1e-4": "harmonicity = 1e-12", "n_r = 64": "n_r = 6"})
    mesh_path = tmp_path / "never.obj"

    result = runner.invoke(cli, ["mesh", "--config", str(config), "--mesh-path", str(mesh_path)])

    assert result.exit_code == 1
    assert not mesh_path.exists()
    assert "harmonicity" in {check["name"] for check in json.loads(result.stdout)["checks"] if check["verdict"] == "fail"}
