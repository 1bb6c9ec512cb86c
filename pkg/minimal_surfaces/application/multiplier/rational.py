"""
The multiplier f(z) = (z - m1)(z - m2)(m1 z + 1)(m2 z + 1) / z^2 with real m1, m2.

Its only poles are 0 and infinity, f o I = conj(f) for I(z) = -1/conj(z), its zeros are
{m1, m2, -1/m1, -1/m2}, and the residue of f(z)/z dz at 0 is

    b_0 = (1 - m1^2)(1 - m2^2) - 2 m1 m2 = 1 - (m1 + m2)^2 + (m1 m2)^2.

All identities are checked in exact Q(sqrt(D)) arithmetic; floating point is used only for the
bound scan of |f| on a closed annulus.

─────────────────────────────
توضیح فارسی:
ضریب گویا f که تنها قطب‌هایش صفر و بی‌نهایت است و با برگردان I سازگار است.
m2 از معادله‌ی صفر شدن مانده‌ی f(z)/z در صفر به دست می‌آید؛ این معادله در میدان Q(sqrt(D)) دقیق حل می‌شود.
فقط جست‌وجوی کران |f| روی حلقه‌ی بسته با اعداد اعشاری انجام می‌شود.
─────────────────────────────
"""
import math
from fractions import Fraction
from typing import Any

import numpy as np
from loguru import logger
from tqdm import tqdm

from minimal_surfaces.domain.exceptions import NoValidRootError, ParameterError, ZeroInAnnulusError
from minimal_surfaces.domain.laurent import LaurentCoefficients
from minimal_surfaces.domain.multiplier import MultiplierParams
from minimal_surfaces.settings import settings

from .quad_field import QuadExact

Exact = QuadExact | Fraction | int


def as_exact(value: Exact | str) -> QuadExact:
    if isinstance(value, QuadExact):
        return value

    try:
        return QuadExact(Fraction(value))
    except (TypeError, ValueError, ZeroDivisionError) as error:
        raise ParameterError(f"Expected a rational number, got {value!r}.") from error


def residue_invariant(m1: Exact, m2: Exact) -> QuadExact:
    m1, m2 = as_exact(m1), as_exact(m2)

    return (1 - m1 * m1) * (1 - m2 * m2) - 2 * m1 * m2


def solve_m2(m1: Exact | str) -> tuple[QuadExact, QuadExact]:
    """Roots of (m1^2 - 1) m2^2 - 2 m1 m2 + (1 - m1^2) = 0, larger root first.

    The two roots multiply to -1, so they are m2 and -1/m2.

    Raises:
        NoValidRootError: m1 = 0, or m1^2 = 1 (the equation turns linear with only root m2 = 0).
    """
    m1 = as_exact(m1)
    if not m1.is_rational:
        raise ParameterError(f"m1 must be rational, got {m1}.")
    if m1 == 0:
        raise NoValidRootError("m1 must be nonzero: it is a zero of f.")

    A = m1 * m1 - 1
    B = -2 * m1
    C = 1 - m1 * m1
    if A == 0:
        raise NoValidRootError(f"m1 = {m1} makes the residue equation linear; its only root m2 = 0 is not admissible.")

    discriminant = B * B - 4 * A * C
    root = QuadExact.sqrt(discriminant.a)
    plus = (-B + root) / (2 * A)
    minus = (-B - root) / (2 * A)

    return (plus, minus) if plus > minus else (minus, plus)


def coefficients(m1: Exact | str, m2: Exact | str) -> MultiplierParams:
    """Exact Laurent coefficients b_{-2..2} and zeros of f for real, nonzero m1, m2."""
    m1, m2 = as_exact(m1), as_exact(m2)
    if m1 == 0 or m2 == 0:
        raise ParameterError("m1 and m2 must be nonzero.")

    s = m1 + m2
    p = m1 * m2
    b = {
        -2: p,
        -1: -s * (1 - p),
        0: 1 - s * s + p * p,
        1: s * (1 - p),
        2: p,
    }
    zeros = (m1, m2, -1 / m1, -1 / m2)

    return MultiplierParams(m1=m1, m2=m2, b=b, zeros=zeros)


def multiplier_series(params: MultiplierParams, annulus: tuple[float, float] = (0.0, math.inf)) -> LaurentCoefficients:
    return LaurentCoefficients.from_mapping(params.float_coefficients(), band=params.m, annulus=annulus)


def multiplier_values(params: MultiplierParams, z: Any) -> Any:
    """Direct rational evaluation of f."""
    m1, m2 = float(params.m1), float(params.m2)
    z = np.asarray(z, dtype=np.complex128)

    return (z - m1) * (z - m2) * (m1 * z + 1) * (m2 * z + 1) / z**2


def function_symmetry_holds(params: MultiplierParams) -> bool:
    """b_{-n} = (-1)^n conj(b_n) exactly; real parameters make conj(b_n) = b_n."""
    return all(params.b[-n] == (-1) ** n * params.b[n] for n in range(params.m + 1))


def zero_moduli(params: MultiplierParams) -> tuple[QuadExact, ...]:
    return tuple(abs(zero) for zero in params.zeros)


def zeros_on_unit_circle(params: MultiplierParams) -> list[QuadExact]:
    return [zero for zero in params.zeros if abs(zero) == 1]


def zeros_in_closed_annulus(params: MultiplierParams, rho: float) -> list[QuadExact]:
    """Zeros with 1/rho <= |zero| <= rho, compared exactly against the binary value of rho."""
    outer = Fraction(rho)
    inner = 1 / outer

    return [zero for zero in params.zeros if inner <= abs(zero) <= outer]


def annulus_bounds(
    params: MultiplierParams,
    rho: float,
    radii: int | None = None,
    angles: int | None = None,
    inflation: float | None = None,
) -> float:
    """A constant c > 1 with 1/c < |f| < c on the closed annulus 1/rho <= |z| <= rho.

    Raises:
        ZeroInAnnulusError: If a zero of f lies in the closed annulus.
    """
    radii = settings.BOUNDS_GRID_RADII if radii is None else radii
    angles = settings.BOUNDS_GRID_ANGLES if angles is None else angles
    inflation = settings.BOUNDS_INFLATION if inflation is None else inflation

    if rho <= 1.0:
        raise ParameterError(f"rho must exceed 1, got {rho}.")

    trapped = zeros_in_closed_annulus(params, rho)
    if trapped:
        raise ZeroInAnnulusError(
            f"Zeros {', '.join(str(z) for z in trapped)} of f lie in the closed annulus [1/{rho}, {rho}]; take k larger."
        )

    theta = 2.0 * np.pi * np.arange(angles) / angles
    sup, inf = 0.0, math.inf
    for r in tqdm(np.linspace(1.0 / rho, rho, radii), desc="Scanning |f|", disable=not settings.SHOW_PROGRESS, leave=False):
        modulus = np.abs(multiplier_values(params, r * np.exp(1j * theta)))
        sup, inf = max(sup, float(modulus.max())), min(inf, float(modulus.min()))

    c = max(sup, 1.0 / inf) * inflation
    logger.debug(f"|f| in [{inf:.6g}, {sup:.6g}] on A({rho}); c = {c:.6g}")

    return c