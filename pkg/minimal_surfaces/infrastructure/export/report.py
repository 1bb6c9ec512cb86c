from pathlib import Path

from loguru import logger

from minimal_surfaces.domain.reports import RunReport


def write_report(report: RunReport, path: str | Path) -> Path:
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(report.model_dump_json(indent=2) + "\n", encoding="utf-8")
    except OSError:
        logger.exception(f"Failed to write report to {path}")
        raise

    logger.info(f"Wrote {report.command} report ({report.verdict}) to {path}.")

    return path
