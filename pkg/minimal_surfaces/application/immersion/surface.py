"""
X(z) = Re int_1^z (Psi_1, Psi_2, Psi_3) on A(rho) and the checks that make it a well-defined
minimal immersion of the Moebius strip A(rho)/<I>.

─────────────────────────────
توضیح فارسی:
غوطه‌وری X = Re(F(z) - F(1)) که F پادمشتق Psi است.
دوره‌ها، سازگاری با برگردان I و هارمونیک بودن X این‌جا بررسی می‌شوند.
نقص هارمونیک بر مقیاس مشتق دوم F تقسیم می‌شود تا مستقل از اندازه‌ی X باشد.
─────────────────────────────
"""
from typing import Any

import numpy as np
from loguru import logger
from numpy.typing import NDArray

from minimal_surfaces.application.laurent import antiderivative, derivative, evaluate
from minimal_surfaces.domain.base.value import readonly_complex
from minimal_surfaces.domain.immersion import ImmersionData
from minimal_surfaces.domain.laurent import FormOnAnnulus, LaurentCoefficients

_HARMONICITY_CENTRES = 64


def integrate(psi: tuple[FormOnAnnulus, FormOnAnnulus, FormOnAnnulus], relative: float | None = None) -> ImmersionData:
    """Primitives of the three exact forms.

    Raises:
        NonExactFormError: If one of the forms has a residue above tolerance.
    """
    F = tuple(antiderivative(form, relative) for form in psi)
    logger.info(f"Integrated Psi on {F[0].annulus} with band {F[0].band}.")

    return ImmersionData(F=F)


def evaluate_X(X: ImmersionData, z: Any) -> NDArray[np.float64]:
    """Points of R^3 along the last axis."""
    z = np.asarray(z, dtype=np.complex128)
    values = [np.real(np.asarray(evaluate(F, z)) - evaluate(F, X.base_point)) for F in X.F]

    return np.stack(values, axis=-1)


def metric_density(X: ImmersionData, z: Any) -> NDArray[np.float64]:
    """lambda(z) = |F'(z)|, read off the primitives."""
    z = np.asarray(z, dtype=np.complex128)
    densities = [np.asarray(evaluate(derivative(F).phi, z)) / z for F in X.F]

    return np.sqrt(sum(np.abs(density) ** 2 for density in densities))


def involution_compat_defect(X: ImmersionData, samples: Any) -> float:
    """max ||X(-1/conj(z)) - X(z)|| over samples."""
    z = np.asarray(samples, dtype=np.complex128)
    image = -1.0 / np.conj(z)

    return float(np.max(np.linalg.norm(evaluate_X(X, image) - evaluate_X(X, z), axis=-1)))


def period_defect(psi: tuple[FormOnAnnulus, FormOnAnnulus, FormOnAnnulus], points: int = 4096) -> float:
    """Largest |closed integral of Psi_j over |z| = 1| by the trapezoid rule.

    On the circle phi(z) dz/z = i phi(e^{i theta}) d theta.
    """
    theta = 2.0 * np.pi * np.arange(points) / points
    circle = np.exp(1j * theta)

    periods = [2.0j * np.pi * np.mean(np.asarray(evaluate(form.phi, circle))) for form in psi]

    return float(max(abs(period) for period in periods))


def harmonicity_centres(count: int = _HARMONICITY_CENTRES) -> NDArray[np.complex128]:
    return np.exp(2.0j * np.pi * (np.arange(count) + 0.5) / count)


def second_derivative_scale(X: ImmersionData, z: Any) -> NDArray[np.float64]:
    """|F''(z)| + |F'(z)| / |z|, the size of the second derivatives that cancel in the Laplacian of X.

    The first term is positive wherever the Gauss map is unbranched; the second keeps affine maps finite.
    """
    z = np.asarray(z, dtype=np.complex128)
    second = [np.asarray(evaluate(_second_derivative(F), z)) / z**2 for F in X.F]

    return np.sqrt(sum(np.abs(value) ** 2 for value in second)) + metric_density(X, z) / np.abs(z)


def harmonicity_defect(X: ImmersionData, h: float, centres: Any | None = None) -> float:
    """max over centres of ||five-point Laplacian of X|| / second_derivative_scale(z).

    Both sides scale like X / length^2, so the defect does not depend on how X or z is scaled.
    """
    z = harmonicity_centres() if centres is None else np.asarray(centres, dtype=np.complex128)

    stencil = evaluate_X(X, z + h) + evaluate_X(X, z - h) + evaluate_X(X, z + 1j * h) + evaluate_X(X, z - 1j * h)
    laplacian = (stencil - 4.0 * evaluate_X(X, z)) / h**2

    return float(np.max(np.linalg.norm(laplacian, axis=-1) / second_derivative_scale(X, z)))


def _second_derivative(F: LaurentCoefficients) -> LaurentCoefficients:
    # z^2 F''(z) = sum n (n - 1) F_n z^n
    n = F.indices

    return F.model_copy(update={"coeffs": readonly_complex(F.coeffs * n * (n - 1))})
