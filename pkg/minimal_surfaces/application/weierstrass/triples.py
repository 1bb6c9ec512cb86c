from abc import ABC, abstractmethod
from collections.abc import Callable
from typing import Any

import numpy as np
from numpy.typing import NDArray

from minimal_surfaces.application.laurent import evaluate
from minimal_surfaces.domain.laurent import FormOnAnnulus
from minimal_surfaces.domain.types import Representation

Evaluator = Callable[[Any], Any]


class WeierstrassTriple(ABC):
    """Three holomorphic 1-forms (Phi_1, Phi_2, Phi_3) that define X = Re int (Phi_1, Phi_2, Phi_3)."""

    representation: Representation

    @abstractmethod
    # dz-densities of the three forms, stacked along the first axis
    def densities(self, z: Any) -> NDArray[np.complex128]: ...

    def regularity_values(self, z: Any) -> NDArray[np.float64]:
        return np.sum(np.abs(self.densities(z)) ** 2, axis=0)

    def gauss_fallback(self, z: Any) -> Any | None:
        """Gauss map from the underlying (g, eta) pair, when the triple was built from one."""
        return None


class AnalyticTriple(WeierstrassTriple):
    representation = Representation.ANALYTIC

    def __init__(
        self,
        evaluators: tuple[Evaluator, Evaluator, Evaluator],
        g: Evaluator | None = None,
        eta_density: Evaluator | None = None,
    ) -> None:
        self._evaluators = evaluators
        self.g = g
        self.eta_density = eta_density

    def densities(self, z: Any) -> NDArray[np.complex128]:
        z = np.asarray(z, dtype=np.complex128)

        return np.stack([np.broadcast_to(np.asarray(ev(z), dtype=np.complex128), z.shape) for ev in self._evaluators])

    def gauss_fallback(self, z: Any) -> Any | None:
        if self.g is None:
            return None

        return np.asarray(self.g(z), dtype=np.complex128)


class LaurentTriple(WeierstrassTriple):
    """Forms phi_j(z) dz/z stored as Laurent series; their dz-density is phi_j(z)/z."""

    representation = Representation.LAURENT

    def __init__(self, forms: tuple[FormOnAnnulus, FormOnAnnulus, FormOnAnnulus]) -> None:
        self.forms = tuple(forms)

    @property
    def annulus(self) -> tuple[float, float]:
        r_in = max(form.phi.r_in for form in self.forms)
        r_out = min(form.phi.r_out for form in self.forms)

        return r_in, r_out

    def phi_values(self, z: Any) -> NDArray[np.complex128]:
        z = np.asarray(z, dtype=np.complex128)

        return np.stack([np.asarray(evaluate(form.phi, z), dtype=np.complex128) for form in self.forms])

    def densities(self, z: Any) -> NDArray[np.complex128]:
        z = np.asarray(z, dtype=np.complex128)

        return self.phi_values(z) / z

    def regularity_values(self, z: Any) -> NDArray[np.float64]:
        return np.sum(np.abs(self.phi_values(z)) ** 2, axis=0)
