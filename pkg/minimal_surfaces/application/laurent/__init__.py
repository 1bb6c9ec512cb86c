from .core import (
    antiderivative,
    derivative,
    evaluate,
    is_exact,
    multiply,
    pullback_form,
    pullback_power,
    residue,
    residue_tolerance,
    symmetry_defect,
)

__all__ = [
    "antiderivative",
    "derivative",
    "evaluate",
    "is_exact",
    "multiply",
    "pullback_form",
    "pullback_power",
    "residue",
    "residue_tolerance",
    "symmetry_defect",
]
