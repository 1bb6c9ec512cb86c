from .quad_field import QuadExact, is_square_free, square_free_split
from .rational import (
    annulus_bounds,
    as_exact,
    coefficients,
    function_symmetry_holds,
    multiplier_series,
    multiplier_values,
    residue_invariant,
    solve_m2,
    zero_moduli,
    zeros_in_closed_annulus,
    zeros_on_unit_circle,
)

__all__ = [
    "QuadExact",
    "annulus_bounds",
    "as_exact",
    "coefficients",
    "function_symmetry_holds",
    "is_square_free",
    "multiplier_series",
    "multiplier_values",
    "residue_invariant",
    "solve_m2",
    "square_free_split",
    "zero_moduli",
    "zeros_in_closed_annulus",
    "zeros_on_unit_circle",
]
