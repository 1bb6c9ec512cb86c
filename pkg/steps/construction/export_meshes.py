from loguru import logger
from typing_extensions import Annotated
from zenml import step

from minimal_surfaces.application.runs import run_mesh
from minimal_surfaces.domain.config import RunConfig
from minimal_surfaces.domain.reports import RunReport


@step
def export_meshes(config: RunConfig, report: RunReport) -> Annotated[list[str], "mesh_paths"]:
    """Write the configured mesh once verification has passed.

    Raises:
        RuntimeError: If the verification report failed.
    """
    if not report.passed:
        logger.error("Verification report failed; no mesh is written.")

        raise RuntimeError("Refusing to export meshes for a failing verification report.")

    mesh_report, path = run_mesh(config)
    if path is None:
        raise RuntimeError(f"Mesh checks failed: {[check.name for check in mesh_report.failed()]}")

    return [str(path)]
