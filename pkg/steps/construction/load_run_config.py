from loguru import logger
from typing_extensions import Annotated
from zenml import get_step_context, step

from minimal_surfaces.domain.config import RunConfig
from minimal_surfaces.infrastructure.config import load_run_config as load_config_file


@step
def load_run_config(config_path: str) -> Annotated[RunConfig, "run_config"]:
    """Load and validate a TOML run configuration.

    Args:
        config_path (str): Path of the TOML file.

    Returns:
        RunConfig: The validated configuration.
    """
    logger.info(f"Loading run config: {config_path}")

    config = load_config_file(config_path)

    step_context = get_step_context()
    step_context.add_output_metadata(output_name="run_config", metadata={"config_hash": config.config_hash()})

    return config
