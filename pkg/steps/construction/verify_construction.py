from loguru import logger
from typing_extensions import Annotated
from zenml import get_step_context, step

from minimal_surfaces.application.runs import run_verify
from minimal_surfaces.domain.config import RunConfig
from minimal_surfaces.domain.reports import RunReport
from minimal_surfaces.infrastructure.export import write_report


@step
def verify_construction(config: RunConfig) -> Annotated[RunReport, "report"]:
    report = run_verify(config)
    write_report(report, config.output.report_path)

    if not report.passed:
        logger.error(f"Verification failed: {[check.name for check in report.failed()]}")

    step_context = get_step_context()
    step_context.add_output_metadata(output_name="report", metadata=_get_metadata(report))

    return report


def _get_metadata(report: RunReport) -> dict:
    return {
        "verdict": str(report.verdict),
        "config_hash": report.config_hash,
        "checks": {check.name: str(check.verdict) for check in report.checks},
    }
