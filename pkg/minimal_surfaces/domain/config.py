import hashlib
import json
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


class _Section(BaseModel):
    model_config = ConfigDict(extra="forbid")


class PuncturesSection(_Section):
    alpha: tuple[float, float] = (2.0, 0.0)
    beta: tuple[float, float] = (0.0, 3.0)

    @property
    def alpha_complex(self) -> complex:
        return complex(*self.alpha)

    @property
    def beta_complex(self) -> complex:
        return complex(*self.beta)


class AnnulusSection(_Section):
    R: float = 1.5
    # Pointwise checks sensitive to the truncation tail sample |z^k| inside A(sample_R).
    sample_R: float = 1.2


class TruncationSection(_Section):
    N: int = Field(default=48, ge=1)
    samples: int = 4096


class ConstructionSection(_Section):
    k: Literal["auto"] | int = "auto"
    margin: float = Field(default=0.05, ge=0.0, lt=1.0)


class MultiplierSection(_Section):
    m1: str = "2"
    D: int = Field(default=13, ge=1)


class MeshSection(_Section):
    n_r: int = 64
    n_theta: int = 256
    boundary_inset: float = Field(default=0.02, gt=0.0, lt=0.5)
    quotient: bool = True


class ToleranceSection(_Section):
    res: float = 1e-12
    symmetry: float = 1e-10
    conformality: float = 1e-10
    compat: float = 1e-8
    metric: float = 1e-9
    gauss: float = 1e-9
    period: float = 1e-10
    oracle: float = 1e-10
    harmonicity: float = 1e-4
    harmonicity_step: float = 1e-3


class ProbeSection(_Section):
    target: str = "alpha"
    epsilons: list[float] = [1e-2, 1e-3, 1e-4, 1e-5]


class OutputSection(_Section):
    report_path: str = "output/report.json"
    mesh_path: str = "output/mobius.obj"


class RunConfig(_Section):
    """A whole run: punctures, annulus, truncation, construction, multiplier, mesh, tolerances, output."""

    punctures: PuncturesSection = PuncturesSection()
    annulus: AnnulusSection = AnnulusSection()
    truncation: TruncationSection = TruncationSection()
    construction: ConstructionSection = ConstructionSection()
    multiplier: MultiplierSection = MultiplierSection()
    mesh: MeshSection = MeshSection()
    tolerances: ToleranceSection = ToleranceSection()
    probe: ProbeSection = ProbeSection()
    output: OutputSection = OutputSection()

    @field_validator("construction")
    @classmethod
    def _k_is_admissible(cls, section: ConstructionSection) -> ConstructionSection:
        # m = 2 for the multiplier family, so an explicit k must be odd and at least 3.
        if section.k != "auto" and (section.k % 2 == 0 or section.k <= 2):
            raise ValueError(f"construction.k must be 'auto' or an odd integer > 2, got {section.k}.")

        return section

    @model_validator(mode="after")
    def _cross_constraints(self) -> "RunConfig":
        min_modulus = min(abs(self.punctures.alpha_complex), abs(self.punctures.beta_complex))
        if not (1.0 < self.annulus.R < min_modulus):
            raise ValueError(f"annulus.R = {self.annulus.R} must satisfy 1 < R < min(|alpha|, |beta|) = {min_modulus}.")
        if not (1.0 < self.annulus.sample_R <= self.annulus.R):
            raise ValueError(f"annulus.sample_R = {self.annulus.sample_R} must lie in (1, R].")

        samples, N = self.truncation.samples, self.truncation.N
        if samples < 4 * N or samples & (samples - 1):
            raise ValueError(f"truncation.samples = {samples} must be a power of two >= 4N = {4 * N}.")

        if self.mesh.n_r < 2 or self.mesh.n_theta < 8 or self.mesh.n_theta % 2:
            raise ValueError("mesh.n_r must be >= 2 and mesh.n_theta an even number >= 8.")

        return self

    def canonical_json(self) -> str:
        return json.dumps(self.model_dump(mode="json"), sort_keys=True, separators=(",", ":"))

    def config_hash(self) -> str:
        return hashlib.sha256(self.canonical_json().encode("utf-8")).hexdigest()
