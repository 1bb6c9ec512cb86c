from pathlib import Path

from minimal_surfaces.domain.laurent import FormOnAnnulus, LaurentCoefficients

STANDARD_CONFIG = Path(__file__).resolve().parents[2] / "configs" / "standard.toml"


def symmetric_form(coefficients: dict[int, complex], annulus: tuple[float, float] = (1 / 1.5, 1.5)) -> FormOnAnnulus:
    """Form-symmetric series built from the indices n >= 0: a_{-n} = (-1)^(n+1) conj(a_n), a_0 imaginary."""
    full: dict[int, complex] = {}
    for n, value in coefficients.items():
        value = complex(value)
        if n == 0:
            full[0] = 1j * value.imag
            continue
        full[n] = value
        full[-n] = (-1) ** (n + 1) * value.conjugate()

    return FormOnAnnulus(phi=LaurentCoefficients.from_mapping(full, annulus=annulus))
