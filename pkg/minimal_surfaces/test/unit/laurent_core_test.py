import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from minimal_surfaces.application.laurent import (
    antiderivative,
    derivative,
    evaluate,
    is_exact,
    multiply,
    pullback_form,
    pullback_power,
    residue,
    symmetry_defect,
)
from minimal_surfaces.domain.exceptions import DomainError, NonExactFormError, ParameterError
from minimal_surfaces.domain.laurent import FormOnAnnulus, LaurentCoefficients
from minimal_surfaces.domain.types import SymmetryMode
from minimal_surfaces.test.helpers import symmetric_form

components = st.floats(min_value=-2.0, max_value=2.0, allow_nan=False)
complexes = st.builds(complex, components, components)


@st.composite
def series(draw, max_band: int = 4, annulus: tuple[float, float] = (0.5, 2.0)) -> LaurentCoefficients:
    band = draw(st.integers(min_value=0, max_value=max_band))
    coeffs = draw(st.lists(complexes, min_size=2 * band + 1, max_size=2 * band + 1))

    return LaurentCoefficients(coeffs=coeffs, band=band, r_in=annulus[0], r_out=annulus[1])


def test_evaluate_sums_both_sides() -> None:
    s = LaurentCoefficients.from_mapping({-1: 2.0, 0: 1.0, 2: 1j}, annulus=(0.5, 2.0))

    z = 1.2 * np.exp(0.3j)

    assert evaluate(s, z) == pytest.approx(2.0 / z + 1.0 + 1j * z**2, abs=1e-15)


def test_evaluate_outside_annulus_raises() -> None:
    s = LaurentCoefficients.from_mapping({1: 1.0}, annulus=(0.5, 2.0))

    with pytest.raises(DomainError):
        evaluate(s, 2.5)


def test_evaluate_returns_array_shape() -> None:
    s = LaurentCoefficients.from_mapping({0: 1.0, 1: 1.0})

    values = evaluate(s, np.ones((3, 4)))

    assert values.shape == (3, 4)


def test_coefficients_are_read_only() -> None:
    s = LaurentCoefficients.from_mapping({0: 1.0})

    with pytest.raises(ValueError):
        s.coeffs[0] = 2.0


def test_band_must_match_coefficient_count() -> None:
    with pytest.raises(ValueError):
        LaurentCoefficients(coeffs=[1.0, 2.0], band=1, r_in=0.0, r_out=math.inf)


def test_non_finite_coefficients_rejected() -> None:
    with pytest.raises(ValueError):
        LaurentCoefficients(coeffs=[np.nan], band=0, r_in=0.0, r_out=math.inf)


@given(series(), series())
@settings(max_examples=50, deadline=None)
def test_multiply_matches_pointwise_product(s: LaurentCoefficients, t: LaurentCoefficients) -> None:
    z = np.array([0.8 * np.exp(0.4j), 1.3 * np.exp(-2.1j), 1.0j])

    product = multiply(s, t)

    assert product.band == s.band + t.band
    np.testing.assert_allclose(evaluate(product, z), evaluate(s, z) * evaluate(t, z), rtol=1e-9, atol=1e-9)


def test_multiply_intersects_annuli() -> None:
    s = LaurentCoefficients.from_mapping({1: 1.0}, annulus=(0.5, 2.0))
    t = LaurentCoefficients.from_mapping({-1: 1.0}, annulus=(0.8, 3.0))

    assert multiply(s, t).annulus == (0.8, 2.0)


def test_multiply_disjoint_annuli_raises() -> None:
    s = LaurentCoefficients.from_mapping({1: 1.0}, annulus=(0.5, 0.9))
    t = LaurentCoefficients.from_mapping({1: 1.0}, annulus=(1.1, 3.0))

    with pytest.raises(DomainError):
        multiply(s, t)


@given(series(), st.integers(min_value=1, max_value=5))
@settings(max_examples=50, deadline=None)
def test_pullback_power_places_coefficients_on_multiples_of_k(s: LaurentCoefficients, k: int) -> None:
    pulled = pullback_power(s, k)

    assert pulled.band == k * s.band
    off_lattice = pulled.indices % k != 0
    assert np.all(pulled.coeffs[off_lattice] == 0)
    np.testing.assert_array_equal(pulled.coeffs[~off_lattice], s.coeffs)
    assert pulled.r_in == pytest.approx(s.r_in ** (1 / k))
    assert pulled.r_out == pytest.approx(s.r_out ** (1 / k))


def test_pullback_power_evaluates_at_z_to_the_k() -> None:
    s = LaurentCoefficients.from_mapping({-2: 0.5, 1: 1 - 1j}, annulus=(0.5, 2.0))
    z = 1.1 * np.exp(0.7j)

    assert evaluate(pullback_power(s, 3), z) == pytest.approx(evaluate(s, z**3), rel=1e-13)


def test_pullback_power_rejects_zero_degree() -> None:
    with pytest.raises(ParameterError):
        pullback_power(LaurentCoefficients.from_mapping({0: 1.0}), 0)


def test_pullback_form_scales_by_k() -> None:
    form = FormOnAnnulus(phi=LaurentCoefficients.from_mapping({1: 1.0}))

    assert pullback_form(form, 3).phi.coefficient(3) == 3.0


def test_residue_is_index_zero_coefficient() -> None:
    form = FormOnAnnulus(phi=LaurentCoefficients.from_mapping({-1: 5.0, 0: 0.25j, 1: 2.0}))

    assert residue(form) == 0.25j
    assert not is_exact(form)


def test_antiderivative_differentiates_back() -> None:
    form = FormOnAnnulus(phi=LaurentCoefficients.from_mapping({-2: 1.0, -1: 2j, 1: 3.0, 3: -1.0}))

    F = antiderivative(form)

    assert F.coefficient(0) == 0
    np.testing.assert_allclose(derivative(F).phi.coeffs, form.phi.coeffs)


def test_antiderivative_of_non_exact_form_raises() -> None:
    form = FormOnAnnulus(phi=LaurentCoefficients.from_mapping({0: 1.0, 1: 1.0}))

    with pytest.raises(NonExactFormError):
        antiderivative(form)


def test_antiderivative_is_primitive_along_a_path() -> None:
    form = FormOnAnnulus(phi=LaurentCoefficients.from_mapping({-1: 0.3, 2: 1 + 1j}, annulus=(0.5, 2.0)))
    F = antiderivative(form)
    z, h = 1.2 * np.exp(0.5j), 1e-6

    slope = (evaluate(F, z + h) - evaluate(F, z - h)) / (2 * h)

    assert slope == pytest.approx(evaluate(form.phi, z) / z, rel=1e-8)


def test_symmetry_defect_of_symmetric_series_is_zero() -> None:
    form = symmetric_form({0: 2j, 1: 1 + 1j, 3: -0.5j})

    assert symmetry_defect(form.phi, SymmetryMode.FORM) == 0.0
    assert symmetry_defect(form.phi, SymmetryMode.FUNCTION) > 0.5


def test_function_symmetry_of_real_multiplier_coefficients() -> None:
    f = LaurentCoefficients.from_mapping({-2: 2.0, -1: -3.0, 0: 0.0, 1: 3.0, 2: 2.0}, annulus=(0.5, 2.0))

    assert symmetry_defect(f, SymmetryMode.FUNCTION) == 0.0


def test_symmetry_defect_requires_unit_circle() -> None:
    s = LaurentCoefficients.from_mapping({1: 1.0}, annulus=(1.1, 2.0))

    with pytest.raises(DomainError):
        symmetry_defect(s, SymmetryMode.FORM)


@given(st.dictionaries(st.integers(min_value=0, max_value=3), complexes, min_size=1), st.sampled_from([3, 5, 7]))
@settings(max_examples=50, deadline=None)
def test_odd_pullback_keeps_form_symmetry(coefficients: dict[int, complex], k: int) -> None:
    form = symmetric_form(coefficients)

    assert symmetry_defect(pullback_form(form, k).phi, SymmetryMode.FORM) <= 1e-15


@given(st.dictionaries(st.integers(min_value=0, max_value=3), complexes, min_size=1), st.sampled_from([3, 5]))
@settings(max_examples=50, deadline=None)
def test_function_times_form_symmetry(coefficients: dict[int, complex], k: int) -> None:
    form = symmetric_form(coefficients)
    f = LaurentCoefficients.from_mapping({-2: 1.5, -1: -0.7, 0: 0.2, 1: 0.7, 2: 1.5})

    product = multiply(f, pullback_form(form, k).phi)

    assert symmetry_defect(product, SymmetryMode.FORM) <= 1e-12
