import pytest

from minimal_surfaces.application.runs import ConstructionRun
from minimal_surfaces.domain.config import RunConfig
from minimal_surfaces.domain.laurent import FormOnAnnulus
from minimal_surfaces.infrastructure.config import load_run_config

from .helpers import STANDARD_CONFIG, symmetric_form


@pytest.fixture(scope="session")
def standard_config() -> RunConfig:
    return load_run_config(STANDARD_CONFIG)


@pytest.fixture(scope="session")
def standard_run(standard_config: RunConfig) -> ConstructionRun:
    return ConstructionRun.build(standard_config)


@pytest.fixture(scope="session")
def generic_base() -> tuple[FormOnAnnulus, FormOnAnnulus, FormOnAnnulus]:
    return (
        symmetric_form({0: 1j, 1: 1 + 0.5j, 2: 0.3}),
        symmetric_form({0: -0.5j, 1: 0.2 - 1j, 2: 0.1j}),
        symmetric_form({1: 0.7, 2: -0.4 + 0.2j}),
    )
