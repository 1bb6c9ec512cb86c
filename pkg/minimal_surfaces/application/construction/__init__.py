from .covering import (
    build_psi,
    choose_k,
    construction_params,
    gauss_factorization_defect,
    lifted_involution_defect,
    metric_comparison,
    verify_psi,
)

__all__ = [
    "build_psi",
    "choose_k",
    "construction_params",
    "gauss_factorization_defect",
    "lifted_involution_defect",
    "metric_comparison",
    "verify_psi",
]
