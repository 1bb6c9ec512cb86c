"""
Omitted values of the Gauss map g o T_k = z^k on A(rho).

Its image is the annulus A(R), so the four punctures {alpha, beta, -1/conj(alpha), -1/conj(beta)}
are omitted, and they pair into two points of the projective plane under w ~ -1/conj(w).

─────────────────────────────
توضیح فارسی:
نگاشت گاوس سطح ساخته‌شده z^k است و تصویرش حلقه‌ی A(R) است.
پس چهار نقطه‌ی سوراخ حذف می‌شوند و زیر w ~ -1/conj(w) به دو نقطه‌ی صفحه‌ی تصویری تبدیل می‌شوند.
─────────────────────────────
"""
from fractions import Fraction
from typing import Any

import numpy as np

from minimal_surfaces.application.weierstrass import projective_class
from minimal_surfaces.domain.immersion import GaussReport
from minimal_surfaces.domain.punctures import PunctureConfig


def chordal_distance(p: complex, q: complex) -> float:
    return 2.0 * abs(p - q) / np.sqrt((1.0 + abs(p) ** 2) * (1.0 + abs(q) ** 2))


def exact_clearance(q: complex, R: float) -> Fraction:
    """dist(q, closure of A(R)) in exact arithmetic on the binary values of |q| and R."""
    modulus, outer = Fraction(abs(q)), Fraction(R)
    inner = 1 / outer
    if modulus > outer:
        return modulus - outer
    if modulus < inner:
        return inner - modulus

    return Fraction(0)


def _nearest_image_point(q: complex, R: float) -> complex:
    direction = q / abs(q)

    return direction * (R if abs(q) > R else 1.0 / R)


def gauss_report(punctures: PunctureConfig, k: int, R: float, gauss_values: Any | None = None) -> GaussReport:
    """Omitted points, projective pairing, analytic clearances and, given sampled Gauss values, their distances."""
    omitted = list(punctures.punctures)
    classes = sorted({complex(projective_class(q)) for q in omitted}, key=lambda w: (w.real, w.imag))
    exact = [exact_clearance(q, R) for q in omitted]

    report = GaussReport(
        omitted=omitted,
        projective_classes=_unique(classes),
        clearances=[float(value) for value in exact],
        clearances_exact=[str(value) for value in exact],
        chordal_clearances=[chordal_distance(q, _nearest_image_point(q, R)) for q in omitted],
    )
    if gauss_values is None:
        return report

    g = np.asarray(gauss_values, dtype=np.complex128).reshape(-1)
    modulus = np.abs(g)

    return report.model_copy(
        update={
            "sampled_min_distances": [float(np.min(np.abs(g - q))) for q in omitted],
            "sampled_modulus_range": (float(modulus.min()), float(modulus.max())),
            "sample_count": int(g.size),
        }
    )


def _unique(points: list[complex], tolerance: float = 1e-12) -> list[complex]:
    unique: list[complex] = []
    for point in points:
        if all(abs(point - seen) > tolerance for seen in unique):
            unique.append(point)

    return unique
