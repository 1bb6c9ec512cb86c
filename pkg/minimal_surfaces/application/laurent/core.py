"""
Band-limited Laurent calculus on annuli.

Every operation is a pure function on immutable `LaurentCoefficients` / `FormOnAnnulus`
values: evaluation, products, the power pullback z -> z^k, residues, primitives and the
two coefficient symmetries that encode compatibility with I(z) = -1/conj(z).

─────────────────────────────
توضیح فارسی:
سری‌های لوران بریده‌شده روی یک حلقه.
ضرایب با تبدیل فوریه‌ی گسسته روی دایره‌ی واحد به دست می‌آیند و هر عمل (ارزیابی، ضرب، کشیدن با z^k،
مانده، انتگرال) یک تابع خالص است که مقدار جدیدی برمی‌گرداند.
دو نقص تقارن نشان می‌دهند که فرم یا تابع با برگردان I(z) = -1/conj(z) سازگار است یا نه.
─────────────────────────────
"""
import math
from typing import Any

import numpy as np

from minimal_surfaces.domain.exceptions import DomainError, NonExactFormError, ParameterError
from minimal_surfaces.domain.base.value import readonly_complex
from minimal_surfaces.domain.laurent import FormOnAnnulus, LaurentCoefficients
from minimal_surfaces.domain.types import SymmetryMode
from minimal_surfaces.settings import settings


def evaluate(s: LaurentCoefficients, z: Any) -> Any:
    """Sum a_n z^n over the band in ascending index order.

    Accepts a scalar or an array of points; returns the same shape.
    """
    points = np.asarray(z, dtype=np.complex128)
    if not np.all(s.contains(points)):
        raise DomainError(f"Point(s) outside the annulus of validity ({s.r_in}, {s.r_out}).")

    total = np.zeros_like(points)
    for n, a in zip(range(-s.band, s.band + 1), s.coeffs):
        if a != 0:
            total = total + a * np.power(points, n)

    if total.ndim == 0:
        return complex(total)

    return total


def multiply(s: LaurentCoefficients, t: LaurentCoefficients) -> LaurentCoefficients:
    r_in, r_out = max(s.r_in, t.r_in), min(s.r_out, t.r_out)
    if r_in >= r_out:
        raise DomainError(f"Disjoint annuli {s.annulus} and {t.annulus}.")

    # Dense bands start at -N and -M, so the full convolution starts at -(N + M).
    coeffs = np.convolve(s.coeffs, t.coeffs)

    return LaurentCoefficients(coeffs=coeffs, band=s.band + t.band, r_in=r_in, r_out=r_out)


def pullback_power(s: LaurentCoefficients, k: int) -> LaurentCoefficients:
    """Coefficients of s(z^k): index k*n receives a_n, everything else is zero."""
    if k < 1:
        raise ParameterError(f"The covering degree k must be >= 1, got {k}.")

    band = k * s.band
    coeffs = np.zeros(2 * band + 1, dtype=np.complex128)
    coeffs[::k] = s.coeffs

    return LaurentCoefficients(
        coeffs=coeffs,
        band=band,
        r_in=s.r_in ** (1.0 / k),
        r_out=s.r_out ** (1.0 / k) if math.isfinite(s.r_out) else math.inf,
    )


def pullback_form(form: FormOnAnnulus, k: int) -> FormOnAnnulus:
    """T_k^* of phi(z) dz/z is k phi(z^k) dz/z."""
    return FormOnAnnulus(phi=pullback_power(form.phi, k).scaled(k))


def residue(form: FormOnAnnulus) -> complex:
    return form.phi.coefficient(0)


def residue_tolerance(form: FormOnAnnulus, relative: float | None = None) -> float:
    relative = settings.RESIDUE_REL_TOLERANCE if relative is None else relative

    return relative * form.phi.max_abs


def is_exact(form: FormOnAnnulus, relative: float | None = None) -> bool:
    return abs(residue(form)) <= residue_tolerance(form, relative)


def antiderivative(form: FormOnAnnulus, relative: float | None = None) -> LaurentCoefficients:
    """Primitive F with dF = phi dz/z, i.e. F_n = a_n / n and F_0 = 0.

    Raises:
        NonExactFormError: If the residue exceeds the relative tolerance.
    """
    res = residue(form)
    tolerance = residue_tolerance(form, relative)
    if abs(res) > tolerance:
        raise NonExactFormError(f"Form has residue {res:.3e} at 0 (tolerance {tolerance:.3e}); it is not exact.")

    phi = form.phi
    indices = phi.indices
    coeffs = np.zeros_like(phi.coeffs)
    nonzero = indices != 0
    coeffs[nonzero] = phi.coeffs[nonzero] / indices[nonzero]

    return LaurentCoefficients(coeffs=coeffs, band=phi.band, r_in=phi.r_in, r_out=phi.r_out)


def derivative(F: LaurentCoefficients) -> FormOnAnnulus:
    """dF written as phi dz/z, i.e. phi_n = n F_n."""
    return FormOnAnnulus(phi=F.model_copy(update={"coeffs": readonly_complex(F.coeffs * F.indices)}))


def symmetry_defect(s: LaurentCoefficients, mode: SymmetryMode) -> float:
    """Largest violation of the coefficient symmetry selected by `mode`.

    function: |a_{-n} - (-1)^n conj(a_n)|; form: |a_{-n} - (-1)^{n+1} conj(a_n)|; max over n >= 0.
    """
    if not (s.r_in < 1.0 < s.r_out):
        raise DomainError(f"The unit circle must lie inside the annulus {s.annulus} for a symmetry check.")

    n = np.arange(0, s.band + 1)
    positive = s.coeffs[s.band + n]
    negative = s.coeffs[s.band - n]
    signs = np.where(n % 2 == 0, 1.0, -1.0)
    if SymmetryMode(mode) is SymmetryMode.FORM:
        signs = -signs

    return float(np.max(np.abs(negative - signs * np.conj(positive))))
