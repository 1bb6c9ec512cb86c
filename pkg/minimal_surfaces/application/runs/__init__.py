from .context import ConstructionRun
from .services import dump_coeffs, exit_code, run_mesh, run_multiplier_check, run_probe, run_verify

__all__ = [
    "ConstructionRun",
    "dump_coeffs",
    "exit_code",
    "run_mesh",
    "run_multiplier_check",
    "run_probe",
    "run_verify",
]
