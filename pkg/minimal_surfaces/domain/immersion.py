from typing import Any

import numpy as np
from numpy.typing import NDArray
from pydantic import BaseModel, ValidationInfo, field_validator, model_validator

from .base.value import FrozenValue, readonly_real
from .laurent import LaurentCoefficients
from .types import MeshKind


class ImmersionData(FrozenValue):
    """Primitives F_j of Psi_j with F_j(index 0) = 0; X(z) = Re(F(z) - F(base_point))."""

    F: tuple[LaurentCoefficients, LaurentCoefficients, LaurentCoefficients]
    base_point: complex = 1.0 + 0.0j

    @property
    def annulus(self) -> tuple[float, float]:
        return max(F.r_in for F in self.F), min(F.r_out for F in self.F)


class Mesh(FrozenValue):
    vertices: NDArray[np.float64]
    faces: NDArray[np.int64]
    quotient_pairs: NDArray[np.int64]
    kind: MeshKind
    metadata: dict[str, str] = {}

    @field_validator("vertices", mode="before")
    @classmethod
    def _freeze_vertices(cls, value: Any) -> NDArray[np.float64]:
        return readonly_real(value, width=3)

    @field_validator("faces", "quotient_pairs", mode="before")
    @classmethod
    def _freeze_indices(cls, value: Any, info: ValidationInfo) -> NDArray[np.int64]:
        width = 3 if info.field_name == "faces" else 2
        array = np.array(value, dtype=np.int64).reshape(-1, width)
        array.setflags(write=False)

        return array

    @model_validator(mode="after")
    def _check_indices(self) -> "Mesh":
        count = self.vertices.shape[0]
        for name in ("faces", "quotient_pairs"):
            indices = getattr(self, name)
            if indices.size and (indices.min() < 0 or indices.max() >= count):
                raise ValueError(f"Mesh {name} reference vertices outside [0, {count}).")

        return self

    @property
    def vertex_count(self) -> int:
        return int(self.vertices.shape[0])

    @property
    def face_count(self) -> int:
        return int(self.faces.shape[0])


class GaussReport(BaseModel):
    omitted: list[complex]
    projective_classes: list[complex]
    clearances: list[float]
    clearances_exact: list[str]
    chordal_clearances: list[float]
    sampled_min_distances: list[float] | None = None
    sampled_modulus_range: tuple[float, float] | None = None
    sample_count: int = 0
