from .gauss import chordal_distance, exact_clearance, gauss_report
from .mesh import Orientation, build_mesh, is_orientable, mesh_radii, quotient_pair_defect
from .surface import (
    evaluate_X,
    harmonicity_centres,
    harmonicity_defect,
    integrate,
    involution_compat_defect,
    metric_density,
    period_defect,
    second_derivative_scale,
)

__all__ = [
    "Orientation",
    "build_mesh",
    "chordal_distance",
    "evaluate_X",
    "exact_clearance",
    "gauss_report",
    "harmonicity_centres",
    "harmonicity_defect",
    "integrate",
    "involution_compat_defect",
    "is_orientable",
    "mesh_radii",
    "metric_density",
    "period_defect",
    "quotient_pair_defect",
    "second_derivative_scale",
]
