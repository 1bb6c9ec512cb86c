from .export_meshes import export_meshes
from .load_run_config import load_run_config
from .verify_construction import verify_construction

__all__ = ["export_meshes", "load_run_config", "verify_construction"]
