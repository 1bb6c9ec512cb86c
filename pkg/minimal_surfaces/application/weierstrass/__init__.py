from .forms import conformality_defect, forms_from_pair, gauss_map, metric_density, projective_class, regularity_min
from .triples import AnalyticTriple, LaurentTriple, WeierstrassTriple

__all__ = [
    "AnalyticTriple",
    "LaurentTriple",
    "WeierstrassTriple",
    "conformality_defect",
    "forms_from_pair",
    "gauss_map",
    "metric_density",
    "projective_class",
    "regularity_min",
]
