from functools import cached_property

import numpy as np
from loguru import logger
from numpy.typing import NDArray

from minimal_surfaces.application.construction import build_psi, construction_params
from minimal_surfaces.application.immersion import integrate
from minimal_surfaces.application.multiplier import coefficients, solve_m2
from minimal_surfaces.application.utils import random_annulus_samples, shrink
from minimal_surfaces.application.voss import VossData, restrict_to_annulus, validate_punctures
from minimal_surfaces.application.weierstrass import AnalyticTriple, LaurentTriple, forms_from_pair
from minimal_surfaces.domain.config import RunConfig
from minimal_surfaces.domain.construction import ConstructionParams
from minimal_surfaces.domain.immersion import ImmersionData
from minimal_surfaces.domain.laurent import FormOnAnnulus
from minimal_surfaces.domain.multiplier import MultiplierParams


class ConstructionRun:
    """Lazily assembled stages of one configured construction, shared by the run services."""

    def __init__(self, config: RunConfig) -> None:
        self.config = config

    @classmethod
    def build(cls, config: RunConfig) -> "ConstructionRun":
        run = cls(config)
        _ = run.data  # validates the punctures up front

        return run

    @cached_property
    def data(self) -> VossData:
        punctures = self.config.punctures
        config = validate_punctures(punctures.alpha_complex, punctures.beta_complex)

        return VossData(config)

    @cached_property
    def base(self) -> tuple[FormOnAnnulus, FormOnAnnulus, FormOnAnnulus]:
        truncation = self.config.truncation
        base = restrict_to_annulus(self.data, self.config.annulus.R, truncation.N, truncation.samples)
        logger.info(f"Restricted base data to A({self.config.annulus.R}) with N = {truncation.N}.")

        return base

    @cached_property
    def base_triple(self) -> LaurentTriple:
        return LaurentTriple(self.base)

    @cached_property
    def analytic_triple(self) -> AnalyticTriple:
        return forms_from_pair(self.data.g, self.data.eta_density)

    @cached_property
    def multiplier(self) -> MultiplierParams:
        m1 = self.config.multiplier.m1
        m2, _ = solve_m2(m1)

        return coefficients(m1, m2)

    @cached_property
    def params(self) -> ConstructionParams:
        construction = self.config.construction
        k = None if construction.k == "auto" else construction.k

        return construction_params(self.multiplier, self.config.annulus.R, construction.margin, k)

    @cached_property
    def psi(self) -> tuple[FormOnAnnulus, FormOnAnnulus, FormOnAnnulus]:
        return build_psi(self.base, self.multiplier, self.params.k)

    @cached_property
    def immersion(self) -> ImmersionData:
        return integrate(self.psi, self.config.tolerances.res)

    def annulus_samples(self, count: int = 1000, seed: int = 0) -> NDArray[np.complex128]:
        """Samples spread over the whole annulus A(rho)."""
        return random_annulus_samples(*shrink(self.params.annulus, 1e-3), count=count, seed=seed)

    def working_samples(self, count: int = 1000, seed: int = 1) -> NDArray[np.complex128]:
        """Samples with |z^k| inside A(sample_R), where the truncation tail is negligible."""
        radius = self.config.annulus.sample_R ** (1.0 / self.params.k)

        return random_annulus_samples(1.0 / radius, radius, count=count, seed=seed)

    def base_working_samples(self, count: int = 1000, seed: int = 2) -> NDArray[np.complex128]:
        radius = self.config.annulus.sample_R

        return random_annulus_samples(1.0 / radius, radius, count=count, seed=seed)
