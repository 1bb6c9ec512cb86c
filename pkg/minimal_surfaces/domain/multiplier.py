from typing import Any

from .base.value import FrozenValue


class MultiplierParams(FrozenValue):
    """f(z) = (z - m1)(z - m2)(m1 z + 1)(m2 z + 1) / z^2 = sum_{n=-m}^{m} b_n z^n, held exactly.

    `m1`, `m2` and the values of `b` and `zeros` are `QuadExact` numbers.
    """

    m1: Any
    m2: Any
    b: dict[int, Any]
    zeros: tuple[Any, Any, Any, Any]
    m: int = 2

    @property
    def residue(self) -> Any:
        return self.b[0]

    @property
    def field(self) -> int:
        return max(value.D for value in (self.m1, self.m2))

    def float_coefficients(self) -> dict[int, float]:
        return {n: float(value) for n, value in self.b.items()}
