import math
from collections.abc import Mapping
from typing import Any

import numpy as np
from numpy.typing import NDArray
from pydantic import field_validator, model_validator

from .base.value import FrozenValue, readonly_complex


class LaurentCoefficients(FrozenValue):
    """Truncated two-sided series sum_{n=-band}^{band} coeffs[n + band] z^n.

    The series is valid on the open annulus r_in < |z| < r_out. r_in = 0 denotes the
    punctured plane and r_out = inf an unbounded outer radius.
    """

    coeffs: NDArray[np.complex128]
    band: int
    r_in: float
    r_out: float

    @field_validator("coeffs", mode="before")
    @classmethod
    def _freeze_coeffs(cls, value: Any) -> NDArray[np.complex128]:
        return readonly_complex(value)

    @model_validator(mode="after")
    def _check_shape(self) -> "LaurentCoefficients":
        if self.band < 0:
            raise ValueError(f"Band must be non-negative, got {self.band}.")
        if self.coeffs.shape != (2 * self.band + 1,):
            raise ValueError(
                f"Expected {2 * self.band + 1} coefficients for band {self.band}, got {self.coeffs.shape[0]}."
            )
        if not (0.0 <= self.r_in < self.r_out) or math.isnan(self.r_out):
            raise ValueError(f"Invalid annulus ({self.r_in}, {self.r_out}).")

        return self

    @classmethod
    def from_mapping(
        cls,
        coefficients: Mapping[int, complex],
        band: int | None = None,
        annulus: tuple[float, float] = (0.0, math.inf),
    ) -> "LaurentCoefficients":
        """Build a dense series from a sparse {index: value} mapping."""
        if band is None:
            band = max((abs(n) for n in coefficients), default=0)

        dense = np.zeros(2 * band + 1, dtype=np.complex128)
        for n, value in coefficients.items():
            if abs(n) > band:
                raise ValueError(f"Index {n} lies outside band {band}.")
            dense[n + band] = value

        return cls(coeffs=dense, band=band, r_in=annulus[0], r_out=annulus[1])

    @classmethod
    def zeros(cls, band: int, annulus: tuple[float, float] = (0.0, math.inf)) -> "LaurentCoefficients":
        return cls(coeffs=np.zeros(2 * band + 1), band=band, r_in=annulus[0], r_out=annulus[1])

    @property
    def annulus(self) -> tuple[float, float]:
        return self.r_in, self.r_out

    @property
    def indices(self) -> NDArray[np.int64]:
        return np.arange(-self.band, self.band + 1)

    @property
    def max_abs(self) -> float:
        return float(np.max(np.abs(self.coeffs))) if self.coeffs.size else 0.0

    def coefficient(self, n: int) -> complex:
        if abs(n) > self.band:
            return 0j

        return complex(self.coeffs[n + self.band])

    def contains(self, z: Any) -> NDArray[np.bool_]:
        modulus = np.abs(np.asarray(z, dtype=np.complex128))

        return (modulus > self.r_in) & (modulus < self.r_out)

    def scaled(self, factor: complex) -> "LaurentCoefficients":
        return self.model_copy(update={"coeffs": readonly_complex(self.coeffs * factor)})


class FormOnAnnulus(FrozenValue):
    """Holomorphic 1-form phi(z) dz/z; its residue at 0 is phi's index-0 coefficient."""

    phi: LaurentCoefficients

    @property
    def band(self) -> int:
        return self.phi.band

    @property
    def annulus(self) -> tuple[float, float]:
        return self.phi.annulus

    def scaled(self, factor: complex) -> "FormOnAnnulus":
        return FormOnAnnulus(phi=self.phi.scaled(factor))
