"""
Weierstrass machinery shared by the punctured-sphere data and the constructed forms.

    Phi_1 = eta (1 - g^2) / 2,   Phi_2 = i eta (1 + g^2) / 2,   Phi_3 = eta g
    ds^2  = |Phi_1|^2 + |Phi_2|^2 + |Phi_3|^2,   g = -(Phi_1 + i Phi_2) / Phi_3
"""
from typing import Any

import numpy as np

from minimal_surfaces.domain.exceptions import RegularityError

from .triples import AnalyticTriple, Evaluator, WeierstrassTriple

_ZERO_RTOL = 1e-15


def forms_from_pair(g: Evaluator, eta_density: Evaluator) -> AnalyticTriple:
    return AnalyticTriple(
        evaluators=(
            lambda z: 0.5 * (1 - g(z) ** 2) * eta_density(z),
            lambda z: 0.5j * (1 + g(z) ** 2) * eta_density(z),
            lambda z: g(z) * eta_density(z),
        ),
        g=g,
        eta_density=eta_density,
    )


def gauss_map(triple: WeierstrassTriple, z: Any) -> Any:
    """-(Phi_1 + i Phi_2) / Phi_3, with infinity where only Phi_3 vanishes.

    At zeros of Phi_3 the (g, eta) pair is used when the triple carries one.

    Raises:
        RegularityError: If all three forms vanish at a sample.
    """
    points = np.asarray(z, dtype=np.complex128)
    phi1, phi2, phi3 = triple.densities(points)
    scale = np.abs(phi1) + np.abs(phi2) + np.abs(phi3)
    if np.any(scale == 0):
        raise RegularityError("The three Weierstrass forms vanish simultaneously; the Gauss map is undefined.")

    numerator = -(phi1 + 1j * phi2)
    vanishing = np.abs(phi3) <= _ZERO_RTOL * scale
    with np.errstate(divide="ignore", invalid="ignore"):
        values = np.where(vanishing, complex(np.inf, 0.0), numerator / np.where(vanishing, 1.0, phi3))

    if np.any(vanishing):
        fallback = triple.gauss_fallback(points)
        if fallback is not None:
            values = np.where(vanishing, np.broadcast_to(fallback, points.shape), values)

    if values.ndim == 0:
        return complex(values)

    return values


def conformality_defect(triple: WeierstrassTriple, samples: Any) -> float:
    """max |sum Phi_j^2| / (sum |Phi_j|)^2 over samples; scale invariant."""
    densities = triple.densities(np.asarray(samples, dtype=np.complex128))
    scale = np.sum(np.abs(densities), axis=0) ** 2
    defect = np.abs(np.sum(densities**2, axis=0))

    with np.errstate(divide="ignore", invalid="ignore"):
        relative = np.where(scale > 0, defect / scale, 0.0)

    return float(np.max(relative))


def metric_density(triple: WeierstrassTriple, z: Any) -> Any:
    """lambda with ds = lambda |dz|; lambda^2 = sum_j |Phi_j dz-density|^2."""
    values = np.sqrt(np.sum(np.abs(triple.densities(z)) ** 2, axis=0))
    if np.ndim(values) == 0:
        return float(values)

    return values


def regularity_min(triple: WeierstrassTriple, samples: Any) -> float:
    return float(np.min(triple.regularity_values(np.asarray(samples, dtype=np.complex128))))


def projective_class(w: Any) -> Any:
    """Canonical representative of the class {w, -1/conj(w)} in the projective plane.

    The representative has modulus <= 1; on the unit circle (where the class is {w, -w})
    it is the one with argument in [0, pi). Infinity is identified with 0.
    """
    w = np.asarray(w, dtype=np.complex128)
    finite = np.isfinite(w)
    modulus = np.abs(w)
    on_circle = finite & np.isclose(modulus, 1.0, rtol=0.0, atol=1e-15)
    flip = (finite & ~on_circle & (modulus > 1.0)) | (on_circle & (np.mod(np.angle(w), 2 * np.pi) >= np.pi))

    with np.errstate(divide="ignore", invalid="ignore"):
        image = -1.0 / np.conj(w)
    result = np.where(finite, np.where(flip, image, w), 0.0)

    if result.ndim == 0:
        return complex(result)

    return result
