from .obj import export_obj, parse_obj, render_obj
from .report import write_report

__all__ = ["export_obj", "parse_obj", "render_obj", "write_report"]
