"""Immutable base for every domain value.

Laurent coefficients, forms on an annulus and immersion data are frozen pydantic models. The numpy
arrays they hold are made read-only on construction, so one value can be shared between several
evaluations without copying.

─────────────────────────────
توضیح فارسی:
پایه‌ی همه‌ی مقدارهای حوزه (ضرایب لوران، فرم‌ها، داده‌ی غوطه‌وری).
این مدل‌ها پس از ساخته شدن تغییر نمی‌کنند؛ آرایه‌های نام‌پای داخل آن‌ها فقط‌خواندنی می‌شوند
تا بتوان یک مقدار را بدون نگرانی بین چند ارزیابی هم‌زمان به اشتراک گذاشت.
─────────────────────────────
"""

from abc import ABC
from typing import Any

import numpy as np
from numpy.typing import NDArray
from pydantic import BaseModel, ConfigDict


class FrozenValue(BaseModel, ABC):
    """Immutable pydantic value that may carry numpy arrays."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, self.__class__):
            return False

        for name in type(self).model_fields:
            left, right = getattr(self, name), getattr(other, name)
            if isinstance(left, np.ndarray) or isinstance(right, np.ndarray):
                if not np.array_equal(left, right):
                    return False
            elif left != right:
                return False

        return True


def readonly_complex(values: Any) -> NDArray[np.complex128]:
    """Copy `values` into a read-only complex128 vector with finite entries."""
    array = np.array(values, dtype=np.complex128).reshape(-1)
    if not np.all(np.isfinite(array)):
        raise ValueError("Series coefficients must be finite (no NaN/Inf).")

    array.setflags(write=False)

    return array


def readonly_real(values: Any, width: int | None = None) -> NDArray[np.float64]:
    array = np.array(values, dtype=np.float64)
    if width is not None:
        array = array.reshape(-1, width)
    array.setflags(write=False)

    return array
