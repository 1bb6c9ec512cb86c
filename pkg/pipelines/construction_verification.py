"""
load_run_config, verify_construction and export_meshes are defined in steps/construction.

1)
load_run_config: reads the TOML configuration and validates it into a RunConfig.

2)
verify_construction: runs every check of the construction and writes the JSON report.

3)
export_meshes: writes the OBJ mesh, only for a passing report.
"""

from zenml import pipeline

from steps.construction import export_meshes, load_run_config, verify_construction


@pipeline
def construction_verification(config_path: str) -> None:
    config = load_run_config(config_path=config_path)
    report = verify_construction(config=config)
    export_meshes(config=config, report=report)
