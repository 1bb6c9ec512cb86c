"""
The covering construction on A(rho), rho = R^(1/k):

    Psi_j = f(z) T_k^*(Phi_j) = k f(z) phi_j(z^k) dz/z

For odd k > m the residue of Psi_j at 0 only collects b_0 a_{j,0}, which vanishes, so each
Psi_j is exact; f o I = conj(f) and odd k keep the forms compatible with I(z) = -1/conj(z).

─────────────────────────────
توضیح فارسی:
ساخت پوششی: فرم‌های پایه با z -> z^k کشیده و در f ضرب می‌شوند.
اگر k فرد و از m بزرگ‌تر باشد، مانده‌ی هر Psi_j در صفر از بین می‌رود و فرم‌ها دقیق (بدون دوره) می‌شوند.
فرد بودن k سازگاری با I را هم حفظ می‌کند.
─────────────────────────────
"""
from collections.abc import Sequence
from typing import Any

import numpy as np
from loguru import logger
from numpy.typing import NDArray

from minimal_surfaces.application.laurent import evaluate, multiply, pullback_form, residue, symmetry_defect
from minimal_surfaces.application.multiplier import annulus_bounds, multiplier_series, multiplier_values
from minimal_surfaces.application.utils import random_annulus_samples, shrink
from minimal_surfaces.application.weierstrass import (
    LaurentTriple,
    WeierstrassTriple,
    conformality_defect,
    gauss_map,
    metric_density,
    regularity_min,
)
from minimal_surfaces.domain.config import ToleranceSection
from minimal_surfaces.domain.construction import ConstructionParams, MetricComparison, PsiVerification
from minimal_surfaces.domain.exceptions import ParameterError, RegularityError
from minimal_surfaces.domain.laurent import FormOnAnnulus, LaurentCoefficients
from minimal_surfaces.domain.multiplier import MultiplierParams
from minimal_surfaces.domain.reports import CheckRecord
from minimal_surfaces.domain.types import SymmetryMode
from minimal_surfaces.settings import settings

Multiplier = MultiplierParams | LaurentCoefficients
Triple = tuple[FormOnAnnulus, FormOnAnnulus, FormOnAnnulus]

_MAX_K = 100_001


def choose_k(m: int, R: float, zero_moduli: Sequence[Any], margin: float | None = None) -> int:
    """Smallest odd k > m with R^(1/k) (1 + margin) below every zero modulus above 1.

    Zero moduli below 1 must in turn stay under R^(-1/k) (1 - margin).

    Raises:
        ParameterError: R <= 1, a zero on the unit circle, or zeros closer to it than the margin.
    """
    margin = settings.DEFAULT_MARGIN if margin is None else margin
    if R <= 1.0:
        raise ParameterError(f"R must exceed 1, got {R}.")

    moduli = [float(modulus) for modulus in zero_moduli]
    if any(modulus == 1.0 for modulus in moduli):
        raise ParameterError("A zero of the multiplier lies on the unit circle.")

    outer = min((modulus for modulus in moduli if modulus > 1.0), default=np.inf)
    inner = max((modulus for modulus in moduli if modulus < 1.0), default=0.0)
    if outer <= 1.0 + margin or inner >= 1.0 - margin:
        raise ParameterError(f"Zeros at moduli {inner:.6g} / {outer:.6g} leave no room for the margin {margin}.")

    k = m + 1 if m % 2 == 0 else m + 2
    while k < _MAX_K:
        rho = R ** (1.0 / k)
        if rho * (1.0 + margin) < outer and inner < (1.0 - margin) / rho:
            logger.info(f"Chose k = {k} (rho = {rho:.6g}) for R = {R}, margin = {margin}.")
            return k
        k += 2

    raise ParameterError(f"No odd k below {_MAX_K} clears the zeros for R = {R}.")


def construction_params(
    f: MultiplierParams,
    R: float,
    margin: float | None = None,
    k: int | None = None,
) -> ConstructionParams:
    """Resolve k (choose_k when None) and the bound c of |f| on the closed annulus A(rho).

    Raises:
        ParameterError: A forced k that is even, not above m, or too small for the zero margin.
        ZeroInAnnulusError: A zero of f inside the closed annulus.
    """
    margin = settings.DEFAULT_MARGIN if margin is None else margin
    if k is None:
        k = choose_k(f.m, R, [abs(zero) for zero in f.zeros], margin)
    elif k % 2 == 0 or k <= f.m:
        raise ParameterError(f"k must be odd and greater than m = {f.m}, got {k}.")

    rho = R ** (1.0 / k)
    c = annulus_bounds(f, rho)
    for zero in f.zeros:
        modulus = float(abs(zero))
        if (1.0 - margin) / rho <= modulus <= rho * (1.0 + margin):
            raise ParameterError(f"The zero {zero} of f lies within the margin {margin} of A({rho:.6g}); take k larger.")

    return ConstructionParams(k=k, R=R, rho=rho, c=c, margin=margin, m=f.m)


def build_psi(base: Triple, f: Multiplier, k: int, check_parameters: bool = True) -> Triple:
    """Psi_j with phi-part k * f * phi_j(z^k) on the annulus A(R^(1/k)).

    Raises:
        ParameterError: k even or k <= m, unless `check_parameters` is off (negative controls).
    """
    series = _series(f)
    if check_parameters and (k % 2 == 0 or k <= series.band):
        raise ParameterError(f"k must be odd and greater than m = {series.band}, got {k}.")

    psi = tuple(FormOnAnnulus(phi=multiply(series, pullback_form(form, k).phi)) for form in base)
    logger.debug(f"Built Psi with band {psi[0].band} on {psi[0].annulus}.")

    return psi  # type: ignore[return-value]


def lifted_involution_defect(psi: Triple, samples: Any) -> float:
    """Relative max of |psi_j(-1/conj(z)) + conj(psi_j(z))|, the pointwise form of I^*(Psi_j) = conj(Psi_j)."""
    z = np.asarray(samples, dtype=np.complex128)
    image = -1.0 / np.conj(z)

    defect, scale = 0.0, 0.0
    for form in psi:
        values = np.asarray(evaluate(form.phi, z))
        mirrored = np.asarray(evaluate(form.phi, image))
        defect = max(defect, float(np.max(np.abs(mirrored + np.conj(values)))))
        scale = max(scale, float(np.max(np.abs(values))))

    return defect / scale if scale > 0 else 0.0


def verify_psi(
    psi: Triple,
    tolerances: ToleranceSection | None = None,
    samples: Any | None = None,
) -> PsiVerification:
    """Exactness, form symmetry, conformality, regularity and the lifted involution of Psi in one pass."""
    tolerances = tolerances or ToleranceSection()
    triple = LaurentTriple(psi)
    if samples is None:
        samples = random_annulus_samples(*shrink(triple.annulus, 0.01), count=1000)

    residues = [_relative_residue(form) for form in psi]
    symmetry = max(symmetry_defect(form.phi, SymmetryMode.FORM) for form in psi)
    conformality = conformality_defect(triple, samples)
    regularity = regularity_min(triple, samples)
    involution = lifted_involution_defect(psi, samples)

    checks = [
        CheckRecord.upper_bound(
            f"psi_{j}_residue", f"Residue(Psi_{j}, 0) = 0: Psi_{j} is exact", value, tolerances.res
        )
        for j, value in enumerate(residues, start=1)
    ]
    checks += [
        CheckRecord.upper_bound(
            "psi_form_symmetry", "I^*(Psi_1, Psi_2, Psi_3) = conj(Psi_1, Psi_2, Psi_3)", symmetry, tolerances.symmetry
        ),
        CheckRecord.upper_bound(
            "psi_lifted_involution", "psi_j(-1/conj(z)) = -conj(psi_j(z))", involution, tolerances.symmetry
        ),
        CheckRecord.upper_bound(
            "psi_conformality", "Psi_1^2 + Psi_2^2 + Psi_3^2 = 0", conformality, tolerances.conformality
        ),
        CheckRecord.lower_bound(
            "psi_regularity", "|Psi_1|^2 + |Psi_2|^2 + |Psi_3|^2 > 0 on A(rho)", regularity, 0.0
        ),
    ]
    for check in checks:
        logger.debug(f"{check.name}: {check.value:.3e} ({check.verdict})")

    return PsiVerification(
        residues=residues,
        symmetry_defect=symmetry,
        conformality_defect=conformality,
        regularity_min=regularity,
        involution_defect=involution,
        checks=checks,
    )


def metric_comparison(
    psi: Triple,
    base: WeierstrassTriple,
    f: Multiplier,
    k: int,
    samples: Any,
    c: float,
) -> MetricComparison:
    """Extremes of lambda_Psi(z) / (k |z|^(k-1) lambda_Phi(z^k)), which equals |f(z)|.

    Samples where the base density vanishes are excluded.

    Raises:
        RegularityError: If no sample is left to compare.
    """
    z = np.asarray(samples, dtype=np.complex128).reshape(-1)
    lifted = metric_density(LaurentTriple(psi), z)
    base_density = np.asarray(metric_density(base, z**k)) * k * np.abs(z) ** (k - 1)

    keep = base_density > 0
    excluded = int(np.count_nonzero(~keep))
    if excluded:
        logger.warning(f"Excluded {excluded} samples where the base metric density vanishes.")
    if not np.any(keep):
        raise RegularityError("The base metric density vanishes at every sample; nothing to compare.")

    ratio = lifted[keep] / base_density[keep]
    modulus = np.abs(_values(f, z[keep]))
    deviation = np.abs(ratio - modulus) / modulus

    return MetricComparison(
        min_ratio=float(ratio.min()),
        max_ratio=float(ratio.max()),
        c=c,
        max_deviation=float(deviation.max()),
        sample_count=int(np.count_nonzero(keep)),
        excluded=excluded,
    )


def gauss_factorization_defect(psi: Triple, base: WeierstrassTriple, k: int, samples: Any) -> float:
    """max |g_Psi(z) - g_Phi(z^k)| / max(1, |g_Phi(z^k)|): the Gauss map of Psi is g o T_k."""
    z = np.asarray(samples, dtype=np.complex128)
    lifted = np.asarray(gauss_map(LaurentTriple(psi), z))
    expected = np.asarray(gauss_map(base, z**k))

    return float(np.max(np.abs(lifted - expected) / np.maximum(1.0, np.abs(expected))))


def _relative_residue(form: FormOnAnnulus) -> float:
    scale = form.phi.max_abs

    return abs(residue(form)) / scale if scale > 0 else 0.0


def _series(f: Multiplier) -> LaurentCoefficients:
    if isinstance(f, LaurentCoefficients):
        return f

    return multiplier_series(f)


def _values(f: Multiplier, z: NDArray[np.complex128]) -> NDArray[np.complex128]:
    if isinstance(f, LaurentCoefficients):
        return np.asarray(evaluate(f, z), dtype=np.complex128) * np.ones_like(z)

    return multiplier_values(f, z)
