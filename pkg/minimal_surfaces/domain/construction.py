import math

from pydantic import BaseModel, Field, model_validator

from .base.value import FrozenValue
from .reports import CheckRecord


class ConstructionParams(FrozenValue):
    """Covering degree k and the annuli A(R) -> A(rho), rho = R^(1/k), with 1/c < |f| < c on A(rho)."""

    k: int
    R: float
    rho: float
    c: float
    margin: float
    m: int = 2

    @model_validator(mode="after")
    def _check(self) -> "ConstructionParams":
        if self.k % 2 == 0 or self.k <= self.m:
            raise ValueError(f"k must be odd and greater than m = {self.m}, got {self.k}.")
        if not math.isclose(self.rho, self.R ** (1.0 / self.k), rel_tol=1e-12):
            raise ValueError(f"rho = {self.rho} does not equal R^(1/k) = {self.R ** (1.0 / self.k)}.")
        if self.c <= 1.0:
            raise ValueError(f"The bound c must exceed 1, got {self.c}.")

        return self

    @property
    def annulus(self) -> tuple[float, float]:
        return 1.0 / self.rho, self.rho


class PsiVerification(BaseModel):
    residues: list[float]
    symmetry_defect: float
    conformality_defect: float
    regularity_min: float
    involution_defect: float
    checks: list[CheckRecord] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)


class MetricComparison(BaseModel):
    min_ratio: float
    max_ratio: float
    c: float
    max_deviation: float
    sample_count: int
    excluded: int = 0

    @property
    def within_bounds(self) -> bool:
        return 1.0 / self.c < self.min_ratio and self.max_ratio < self.c
