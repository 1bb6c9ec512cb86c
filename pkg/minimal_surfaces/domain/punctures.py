from .base.value import FrozenValue


def antipode(w: complex) -> complex:
    """The fixed-point-free involution I_0(w) = -1/conj(w) of the Riemann sphere."""
    return -1.0 / w.conjugate()


class PunctureConfig(FrozenValue):
    """The pair (alpha, beta); the punctured sphere omits {alpha, beta, -1/conj(alpha), -1/conj(beta)}."""

    alpha: complex
    beta: complex

    @property
    def outer(self) -> tuple[complex, complex]:
        return self.alpha, self.beta

    @property
    def inner(self) -> tuple[complex, complex]:
        return antipode(self.alpha), antipode(self.beta)

    @property
    def punctures(self) -> tuple[complex, complex, complex, complex]:
        return (*self.outer, *self.inner)

    @property
    def min_outer_modulus(self) -> float:
        return min(abs(self.alpha), abs(self.beta))
