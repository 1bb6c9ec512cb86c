from .base import (
    VossData,
    analytic_coefficients,
    classify_probe,
    completeness_probe,
    involution_defect,
    partial_fraction_residues,
    restrict_to_annulus,
    validate_punctures,
    voss_eval,
    voss_eval_at_infinity,
)

__all__ = [
    "VossData",
    "analytic_coefficients",
    "classify_probe",
    "completeness_probe",
    "involution_defect",
    "partial_fraction_residues",
    "restrict_to_annulus",
    "validate_punctures",
    "voss_eval",
    "voss_eval_at_infinity",
]
