import click
from loguru import logger

from pipelines import construction_verification


@click.command()
@click.option("--config", "config_path", default="configs/standard.toml", show_default=True)
def main(config_path: str) -> None:
    """Run the construction verification pipeline on a config file."""
    logger.info(f"Pipeline started for config: {config_path}")

    construction_verification(config_path=config_path)

    logger.info("Pipeline run finished. Check ZenML dashboard.")


if __name__ == "__main__":
    main()
