"""
Exact arithmetic in the quadratic field Q(sqrt(D)).

A value a + b sqrt(D) keeps a and b as Fractions with D square-free, so sums, products, quotients and
orderings of multiplier roots are decided without rounding.

─────────────────────────────
توضیح فارسی:
حساب دقیق در میدان درجه‌دوم Q(sqrt(D)).
هر عدد به شکل a + b sqrt(D) با a و b گویا نگه داشته می‌شود و مقایسه‌ها بدون گرد کردن انجام می‌شوند.
─────────────────────────────
"""
import math
from fractions import Fraction
from functools import total_ordering
from numbers import Rational
from typing import Union

from sympy import factorint

Scalar = Union[int, Fraction, "QuadExact"]


def square_free_split(n: int) -> tuple[int, int]:
    """Write n > 0 as s^2 * d with d square-free; return (s, d)."""
    if n <= 0:
        raise ValueError(f"Expected a positive integer, got {n}.")

    s, d = 1, 1
    for prime, exponent in factorint(n).items():
        s *= prime ** (exponent // 2)
        if exponent % 2:
            d *= prime

    return s, d


def is_square_free(n: int) -> bool:
    return n > 0 and square_free_split(n)[0] == 1


@total_ordering
class QuadExact:
    """Exact element a + b sqrt(D) of Q(sqrt(D)) with a, b rational and D square-free."""

    __slots__ = ("a", "b", "D")

    def __init__(self, a: int | Fraction | str = 0, b: int | Fraction | str = 0, D: int = 1) -> None:
        if not is_square_free(D):
            raise ValueError(f"D must be a positive square-free integer, got {D}.")

        self.a = Fraction(a)
        self.b = Fraction(b) if D != 1 else Fraction(0)
        self.D = int(D)
        if D == 1:
            self.a += Fraction(b)

    @classmethod
    def sqrt(cls, value: int | Fraction) -> "QuadExact":
        """Exact square root of a non-negative rational p/q = sqrt(p q) / q."""
        value = Fraction(value)
        if value < 0:
            raise ValueError(f"Cannot take the real square root of {value}.")
        if value == 0:
            return cls()

        s, d = square_free_split(value.numerator * value.denominator)

        return cls(0, Fraction(s, value.denominator), d) if d != 1 else cls(Fraction(s, value.denominator))

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def _coerce(self, other: object) -> "QuadExact | None":
        if isinstance(other, QuadExact):
            if other.D == self.D or other.is_rational or self.is_rational:
                return other
            raise ValueError(f"Cannot mix Q(sqrt({self.D})) and Q(sqrt({other.D})).")
        if isinstance(other, (int, Rational)):
            return QuadExact(Fraction(other), 0, self.D)

        return None

    def _field(self, other: "QuadExact") -> int:
        return self.D if not self.is_rational else other.D

    def __add__(self, other: object) -> "QuadExact":
        other = self._coerce(other)
        if other is None:
            return NotImplemented

        return QuadExact(self.a + other.a, self.b + other.b, self._field(other))

    __radd__ = __add__

    def __neg__(self) -> "QuadExact":
        return QuadExact(-self.a, -self.b, self.D)

    def __sub__(self, other: object) -> "QuadExact":
        other = self._coerce(other)
        if other is None:
            return NotImplemented

        return self + (-other)

    def __rsub__(self, other: object) -> "QuadExact":
        return (-self) + other

    def __mul__(self, other: object) -> "QuadExact":
        other = self._coerce(other)
        if other is None:
            return NotImplemented

        D = self._field(other)

        return QuadExact(self.a * other.a + self.b * other.b * D, self.a * other.b + self.b * other.a, D)

    __rmul__ = __mul__

    def conjugate(self) -> "QuadExact":
        """Galois conjugate a - b sqrt(D)."""
        return QuadExact(self.a, -self.b, self.D)

    def norm(self) -> Fraction:
        return self.a * self.a - self.b * self.b * self.D

    def inverse(self) -> "QuadExact":
        norm = self.norm()
        if norm == 0:
            raise ZeroDivisionError("QuadExact division by zero.")

        conjugate = self.conjugate()

        return QuadExact(conjugate.a / norm, conjugate.b / norm, self.D)

    def __truediv__(self, other: object) -> "QuadExact":
        other = self._coerce(other)
        if other is None:
            return NotImplemented

        return self * other.inverse()

    def __rtruediv__(self, other: object) -> "QuadExact":
        other = self._coerce(other)
        if other is None:
            return NotImplemented

        return other * self.inverse()

    def __pow__(self, exponent: int) -> "QuadExact":
        if exponent < 0:
            return self.inverse() ** (-exponent)

        result = QuadExact(1, 0, self.D)
        for _ in range(exponent):
            result = result * self

        return result

    def sign(self) -> int:
        """Exact sign of a + b sqrt(D)."""
        sign_a = (self.a > 0) - (self.a < 0)
        sign_b = (self.b > 0) - (self.b < 0)
        if sign_b == 0 or sign_a == sign_b:
            return sign_a or sign_b
        if sign_a == 0:
            return sign_b

        # opposite signs: compare a^2 with b^2 D
        difference = self.a * self.a - self.b * self.b * self.D

        return sign_a if difference > 0 else (sign_b if difference < 0 else 0)

    def __abs__(self) -> "QuadExact":
        return -self if self.sign() < 0 else self

    def __eq__(self, other: object) -> bool:
        try:
            other = self._coerce(other)
        except ValueError:
            return False
        if other is None:
            return NotImplemented

        return (self - other).sign() == 0

    def __lt__(self, other: object) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented

        return (self - other).sign() < 0

    def __hash__(self) -> int:
        if self.is_rational:
            return hash(self.a)

        return hash((self.a, self.b, self.D))

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * math.sqrt(self.D)

    def __repr__(self) -> str:
        return f"QuadExact({self.a!s}, {self.b!s}, D={self.D})"

    def __str__(self) -> str:
        if self.is_rational:
            return str(self.a)

        denominator = math.lcm(self.a.denominator, self.b.denominator)
        A, B = int(self.a * denominator), int(self.b * denominator)
        radical = f"√{self.D}" if abs(B) == 1 else f"{abs(B)}√{self.D}"
        if A == 0:
            numerator = radical if B > 0 else f"-{radical}"
        else:
            numerator = f"{A}{'+' if B > 0 else '-'}{radical}"

        if denominator == 1:
            return numerator

        return f"({numerator})/{denominator}"
