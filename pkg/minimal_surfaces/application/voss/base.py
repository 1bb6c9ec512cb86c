"""
Weierstrass data on the four-punctured sphere and its restriction to an invariant annulus.

    g(z) = z,   eta = i dz / ((z - alpha)(z - beta)(conj(alpha) z + 1)(conj(beta) z + 1))

The involution I(z) = -1/conj(z) permutes the punctures, pulls g back to -1/conj(g) and
eta back to -conj(eta g^2), so the three forms Phi_j are I-compatible. With |alpha|, |beta| > 1
the unit circle avoids the punctures, and any annulus 1/R < |z| < R with R < min(|alpha|, |beta|)
carries the Laurent expansions used by the construction.

─────────────────────────────
توضیح فارسی:
داده‌ی وایرشتراس روی کره‌ی چهار‌سوراخه: نگاشت گاوس g(z) = z و فرم eta با چهار قطب ساده.
برگردان I قطب‌ها را جابه‌جا می‌کند، پس سه فرم Phi_j با I سازگارند.
چون |alpha| و |beta| از یک بزرگ‌ترند، حلقه‌ی 1/R < |z| < R از قطب‌ها دور است و بسط لوران روی آن معتبر است.
ضرایب یک‌بار با FFT و یک‌بار با کسرهای جزئی (به‌عنوان مرجع دقیق) محاسبه می‌شوند.
─────────────────────────────
"""
from collections.abc import Callable, Sequence
from typing import Any

import numpy as np
from loguru import logger
from numpy.typing import NDArray
from scipy.integrate import quad

from minimal_surfaces.domain.exceptions import (
    DomainError,
    InvalidPunctureError,
    ParameterError,
    PoleError,
    UnitAnnulusError,
)
from minimal_surfaces.domain.laurent import FormOnAnnulus, LaurentCoefficients
from minimal_surfaces.domain.punctures import PunctureConfig, antipode
from minimal_surfaces.domain.types import ProbeVerdict
from minimal_surfaces.settings import settings

_COINCIDENCE_RTOL = 1e-12
_POLE_RTOL = 1e-14


def validate_punctures(alpha: complex, beta: complex) -> PunctureConfig:
    """Check the puncture pair and return it as a config.

    Raises:
        InvalidPunctureError: Zero, coincident or antipodally coincident punctures.
        UnitAnnulusError: A puncture on or inside the unit circle.
    """
    alpha, beta = complex(alpha), complex(beta)
    if alpha == 0 or beta == 0:
        raise InvalidPunctureError(f"Punctures must be nonzero, got alpha={alpha}, beta={beta}.")

    if _close(alpha, beta):
        raise InvalidPunctureError(f"alpha and beta coincide ({alpha}).")
    if _close(alpha, antipode(beta)):
        raise InvalidPunctureError(f"alpha = -1/conj(beta) = {antipode(beta)}.")

    for name, value in (("alpha", alpha), ("beta", beta)):
        if abs(value) <= 1.0:
            raise UnitAnnulusError(f"|{name}| = {abs(value)} must exceed 1 so the unit annulus avoids the punctures.")

    return PunctureConfig(alpha=alpha, beta=beta)


class VossData:
    """Pointwise evaluators for g(z) = z and the eta-density of the punctured-sphere data."""

    def __init__(self, config: PunctureConfig) -> None:
        self.config = config
        self._alpha_bar = config.alpha.conjugate()
        self._beta_bar = config.beta.conjugate()

    @property
    def punctures(self) -> tuple[complex, complex, complex, complex]:
        return self.config.punctures

    def g(self, z: Any) -> Any:
        return np.asarray(z, dtype=np.complex128)

    def eta_density(self, z: Any) -> NDArray[np.complex128]:
        z = self._off_punctures(z)
        alpha, beta = self.config.alpha, self.config.beta
        denominator = (z - alpha) * (z - beta) * (self._alpha_bar * z + 1) * (self._beta_bar * z + 1)

        return 1j / denominator

    def phi_hat(self, z: Any) -> NDArray[np.complex128]:
        """dz-densities of (Phi_1, Phi_2, Phi_3) stacked along the first axis."""
        z = self._off_punctures(z)
        eta = self.eta_density(z)
        g = self.g(z)

        return np.stack([0.5 * (1 - g**2) * eta, 0.5j * (1 + g**2) * eta, g * eta])

    def phi_hat_at_infinity(self, w: Any) -> NDArray[np.complex128]:
        """dw-densities of the three forms in the chart w = 1/z (regular at w = 0)."""
        w = np.asarray(w, dtype=np.complex128)
        alpha, beta = self.config.alpha, self.config.beta
        denominator = (1 - alpha * w) * (1 - beta * w) * (self._alpha_bar + w) * (self._beta_bar + w)
        if np.any(np.abs(denominator) == 0):
            raise PoleError("Chart point at infinity maps onto a puncture.")

        return np.stack([-0.5j * (w**2 - 1) / denominator, 0.5 * (w**2 + 1) / denominator, -1j * w / denominator])

    def metric_density(self, z: Any) -> NDArray[np.float64]:
        """ds = lambda |dz| with lambda^2 = sum_j |Phi_j|^2 = |eta|^2 (1 + |g|^2)^2 / 2."""
        return np.sqrt(np.sum(np.abs(self.phi_hat(z)) ** 2, axis=0))

    def _off_punctures(self, z: Any) -> NDArray[np.complex128]:
        z = np.asarray(z, dtype=np.complex128)
        for q in self.punctures:
            if np.any(np.abs(z - q) <= _POLE_RTOL * max(1.0, abs(q))):
                raise PoleError(f"Evaluation at the puncture {q}.")

        return z


def voss_eval(data: VossData, z: Any) -> tuple[Any, NDArray[np.complex128]]:
    """Return the eta-density and the three Phi-hat dz-densities at z."""
    return data.eta_density(z), data.phi_hat(z)


def voss_eval_at_infinity(data: VossData, w: Any) -> NDArray[np.complex128]:
    return data.phi_hat_at_infinity(w)


def involution_defect(data: VossData, samples: Sequence[complex] | NDArray[np.complex128]) -> float:
    """Largest violation over samples of g(I z) = -1/conj(g(z)) and I^*(eta) = -conj(eta g^2).

    With I(z) = -1/conj(z) one has dI = d conj(z) / conj(z)^2, so the pullback density of eta is
    h(I z) / conj(z)^2 against d conj(z).
    """
    z = np.asarray(samples, dtype=np.complex128)
    image = -1.0 / np.conj(z)

    g_defect = np.abs(data.g(image) + 1.0 / np.conj(data.g(z)))

    pulled_back = data.eta_density(image) / np.conj(z) ** 2
    expected = -np.conj(data.eta_density(z) * data.g(z) ** 2)
    eta_defect = np.abs(pulled_back - expected)

    return float(max(np.max(g_defect), np.max(eta_defect)))


def restrict_to_annulus(
    data: VossData,
    R: float,
    N: int | None = None,
    sample_count: int | None = None,
) -> tuple[FormOnAnnulus, FormOnAnnulus, FormOnAnnulus]:
    """Laurent coefficients of phi_j(z) = z * Phi_j-density(z) on A(R), extracted by FFT on |z| = 1.

    a_n = (1/S) sum_s phi_j(e^{i theta_s}) e^{-i n theta_s}, theta_s = 2 pi s / S.
    """
    N = settings.DEFAULT_BAND if N is None else N
    sample_count = settings.DEFAULT_SAMPLE_COUNT if sample_count is None else sample_count

    if not (1.0 < R < data.config.min_outer_modulus):
        raise DomainError(f"R = {R} must satisfy 1 < R < min(|alpha|, |beta|) = {data.config.min_outer_modulus}.")
    if sample_count < 4 * N or sample_count & (sample_count - 1):
        raise ParameterError(f"sample_count = {sample_count} must be a power of two >= 4N = {4 * N}.")

    theta = 2.0 * np.pi * np.arange(sample_count) / sample_count
    circle = np.exp(1j * theta)
    values = circle * data.phi_hat(circle)

    spectrum = np.fft.fft(values, axis=1) / sample_count
    wrapped = np.arange(-N, N + 1) % sample_count

    logger.debug(f"Restricted base data to A({R}) with band {N} from {sample_count} samples.")

    return tuple(  # type: ignore[return-value]
        FormOnAnnulus(phi=LaurentCoefficients(coeffs=row[wrapped], band=N, r_in=1.0 / R, r_out=R))
        for row in spectrum
    )


def partial_fraction_residues(data: VossData, numerator: Callable[[complex], complex]) -> dict[complex, complex]:
    """Residues of numerator(z) * i / Q(z) at the four simple poles, Q the eta denominator."""
    leading = data.config.alpha.conjugate() * data.config.beta.conjugate()
    poles = data.punctures

    residues: dict[complex, complex] = {}
    for q in poles:
        derivative = leading * np.prod([q - other for other in poles if other != q])
        residues[q] = complex(1j * numerator(q) / derivative)

    return residues


def analytic_coefficients(data: VossData, N: int | None = None) -> tuple[LaurentCoefficients, ...]:
    """Laurent coefficients of phi_1, phi_2, phi_3 from partial fractions over the four poles.

    A pole q with |q| > 1 contributes -r q^{-n-1} at index n >= 0; a pole with |q| < 1
    contributes r q^{m-1} at index -m, m >= 1.
    """
    N = settings.DEFAULT_BAND if N is None else N
    numerators: tuple[Callable[[complex], complex], ...] = (
        lambda z: z * 0.5 * (1 - z**2),
        lambda z: z * 0.5j * (1 + z**2),
        lambda z: z * z,
    )

    outer = [q for q in data.punctures if abs(q) > 1.0]
    inner = [q for q in data.punctures if abs(q) < 1.0]
    annulus = (max(abs(q) for q in inner), min(abs(q) for q in outer))

    n = np.arange(0, N + 1)
    m = np.arange(1, N + 1)
    series = []
    for numerator in numerators:
        residues = partial_fraction_residues(data, numerator)
        coeffs = np.zeros(2 * N + 1, dtype=np.complex128)
        for q, r in residues.items():
            if abs(q) > 1.0:
                coeffs[N + n] += -r * q ** (-n - 1.0)
            else:
                coeffs[N - m] += r * q ** (m - 1.0)
        series.append(LaurentCoefficients(coeffs=coeffs, band=N, r_in=annulus[0], r_out=annulus[1]))

    return tuple(series)


def completeness_probe(data: VossData, target: complex, epsilons: Sequence[float]) -> list[float]:
    """Metric lengths L(eps) of the ray segment from target/2 toward target, stopped at distance eps.

    Raises:
        ParameterError: Epsilons not strictly decreasing, or not below the clearance to the
            other punctures / the start point.
        PoleError: The segment passes through another puncture.
    """
    target = complex(target)
    if target == 0:
        raise ParameterError("The probe target must be nonzero (the ray starts at target/2).")

    epsilons = [float(eps) for eps in epsilons]
    if not epsilons or any(b >= a for a, b in zip(epsilons, epsilons[1:])) or epsilons[-1] <= 0:
        raise ParameterError(f"Epsilons must be positive and strictly decreasing, got {epsilons}.")

    direction = target / abs(target)
    start_distance = abs(target) / 2.0
    others = [q for q in data.punctures if not _close(q, target)]
    clearance = min([abs(q - target) for q in others] + [start_distance])
    if epsilons[0] >= clearance:
        raise ParameterError(f"Largest epsilon {epsilons[0]} must stay below the clearance {clearance}.")

    start = target - start_distance * direction
    for q in others:
        if _segment_distance(q, start, target) <= _POLE_RTOL * max(1.0, abs(q)):
            raise PoleError(f"The probe path toward {target} passes through the puncture {q}.")

    def integrand(t: float) -> float:
        d = np.exp(t)
        return float(data.metric_density(target - d * direction)) * d

    lengths: list[float] = []
    upper, total = np.log(start_distance), 0.0
    for eps in epsilons:
        lower = np.log(eps)
        piece, _ = quad(integrand, lower, upper, epsabs=0.0, epsrel=1e-11, limit=200)
        total += piece
        lengths.append(total)
        upper = lower

    logger.debug(f"Completeness probe toward {target}: {lengths}")

    return lengths


def classify_probe(
    epsilons: Sequence[float],
    lengths: Sequence[float],
    spread_tolerance: float | None = None,
    convergence_factor: float | None = None,
) -> tuple[list[float], ProbeVerdict]:
    """Per-unit-log length increments and the divergence verdict.

    A simple pole gives L(eps) ~ -C log(eps): the increments per unit of log(1/eps) are constant.
    """
    spread_tolerance = settings.PROBE_SPREAD_TOLERANCE if spread_tolerance is None else spread_tolerance
    convergence_factor = settings.PROBE_CONVERGENCE_FACTOR if convergence_factor is None else convergence_factor

    increments = [
        (l_next - l_prev) / np.log(e_prev / e_next)
        for (e_prev, l_prev), (e_next, l_next) in zip(zip(epsilons, lengths), zip(epsilons[1:], lengths[1:]))
    ]
    if not increments:
        return [], ProbeVerdict.INCONCLUSIVE

    mean = float(np.mean(increments))
    if mean > 0 and max(abs(d - mean) for d in increments) <= spread_tolerance * mean:
        return increments, ProbeVerdict.DIVERGES
    if all(b * convergence_factor <= a for a, b in zip(increments, increments[1:])):
        return increments, ProbeVerdict.CONVERGES

    return increments, ProbeVerdict.INCONCLUSIVE


def _close(a: complex, b: complex) -> bool:
    return abs(a - b) <= _COINCIDENCE_RTOL * max(abs(a), abs(b), 1.0)


def _segment_distance(point: complex, start: complex, end: complex) -> float:
    direction = end - start
    t = ((point - start) * direction.conjugate()).real / abs(direction) ** 2
    t = min(max(t, 0.0), 1.0)

    return abs(point - (start + t * direction))
