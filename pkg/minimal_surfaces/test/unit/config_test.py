from pathlib import Path

import pytest

from minimal_surfaces.domain.config import RunConfig
from minimal_surfaces.domain.exceptions import ImproperlyConfigured
from minimal_surfaces.infrastructure.config import apply_overrides, load_run_config, parse_run_config
from minimal_surfaces.test.helpers import STANDARD_CONFIG


def test_standard_config_matches_defaults(standard_config: RunConfig) -> None:
    assert standard_config == RunConfig()
    assert standard_config.punctures.alpha_complex == 2.0
    assert standard_config.punctures.beta_complex == 3.0j


def test_hash_is_stable_and_tracks_overrides(standard_config: RunConfig) -> None:
    assert load_run_config(STANDARD_CONFIG).config_hash() == standard_config.config_hash()
    assert len(standard_config.config_hash()) == 64

    overridden = apply_overrides(standard_config, k=5)

    assert overridden.construction.k == 5
    assert overridden.config_hash() != standard_config.config_hash()
    assert standard_config.construction.k == "auto"


def test_missing_file(tmp_path: Path) -> None:
    with pytest.raises(ImproperlyConfigured):
        load_run_config(tmp_path / "absent.toml")


def test_invalid_toml(tmp_path: Path) -> None:
    path = tmp_path / "broken.toml"
    path.write_text("[annulus\nR = 1.5\n")

    with pytest.raises(ImproperlyConfigured):
        load_run_config(path)


@pytest.mark.parametrize(
    "document",
    [
        {"construction": {"k": 2}},
        {"construction": {"k": 4}},
        {"annulus": {"R": 1.0}},
        {"annulus": {"R": 2.5}},
        {"annulus": {"sample_R": 1.6}},
        {"truncation": {"samples": 100}},
        {"truncation": {"N": 48, "samples": 128}},
        {"mesh": {"n_theta": 33}},
        {"mesh": {"boundary_inset": 0.0}},
        {"tolerances": {"unknown": 1.0}},
        {"extra_section": {}},
    ],
)
def test_rejected_documents(document: dict) -> None:
    with pytest.raises(ImproperlyConfigured):
        parse_run_config(document)


def test_partial_document_fills_defaults() -> None:
    config = parse_run_config({"construction": {"k": 5}, "mesh": {"quotient": False}})

    assert config.construction.k == 5
    assert not config.mesh.quotient
    assert config.annulus.R == 1.5


def test_override_revalidates(standard_config: RunConfig) -> None:
    with pytest.raises(ImproperlyConfigured):
        apply_overrides(standard_config, k=2)
