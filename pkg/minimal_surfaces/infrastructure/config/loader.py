import tomllib
from pathlib import Path
from typing import Any

from loguru import logger
from pydantic import ValidationError

from minimal_surfaces.domain.config import RunConfig
from minimal_surfaces.domain.exceptions import ImproperlyConfigured


def load_run_config(path: str | Path) -> RunConfig:
    """Parse and validate a TOML run config.

    Raises:
        ImproperlyConfigured: Missing file, bad TOML, or a config that fails validation.
    """
    path = Path(path)
    try:
        raw = path.read_bytes()
    except OSError as error:
        raise ImproperlyConfigured(f"Cannot read config {path}: {error}") from error

    try:
        document = tomllib.loads(raw.decode("utf-8"))
    except (UnicodeDecodeError, tomllib.TOMLDecodeError) as error:
        raise ImproperlyConfigured(f"Config {path} is not valid TOML: {error}") from error

    config = parse_run_config(document)
    logger.info(f"Loaded config {path} (hash {config.config_hash()[:12]}).")

    return config


def parse_run_config(document: dict[str, Any]) -> RunConfig:
    try:
        return RunConfig.model_validate(document)
    except ValidationError as error:
        raise ImproperlyConfigured(f"Invalid run config: {error}") from error


def apply_overrides(config: RunConfig, **overrides: Any) -> RunConfig:
    """Re-validated copy with the CLI overrides (k, quotient, report and mesh paths) applied."""
    document = config.model_dump(mode="python")
    if overrides.get("k") is not None:
        document["construction"]["k"] = overrides["k"]
    if overrides.get("quotient") is not None:
        document["mesh"]["quotient"] = overrides["quotient"]
    if overrides.get("report_path") is not None:
        document["output"]["report_path"] = str(overrides["report_path"])
    if overrides.get("mesh_path") is not None:
        document["output"]["mesh_path"] = str(overrides["mesh_path"])

    return parse_run_config(document)
