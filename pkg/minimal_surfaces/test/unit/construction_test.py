import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from minimal_surfaces.application.construction import (
    build_psi,
    choose_k,
    construction_params,
    gauss_factorization_defect,
    lifted_involution_defect,
    metric_comparison,
    verify_psi,
)
from minimal_surfaces.application.laurent import residue, symmetry_defect
from minimal_surfaces.application.multiplier import QuadExact, coefficients, multiplier_values
from minimal_surfaces.application.runs import ConstructionRun
from minimal_surfaces.application.utils import random_annulus_samples
from minimal_surfaces.application.weierstrass import AnalyticTriple, LaurentTriple, gauss_map
from minimal_surfaces.domain.exceptions import ParameterError, RegularityError
from minimal_surfaces.domain.laurent import FormOnAnnulus, LaurentCoefficients
from minimal_surfaces.domain.types import SymmetryMode, Verdict
from minimal_surfaces.test.helpers import symmetric_form

F = coefficients(2, (2 + QuadExact(0, 1, 13)) / 3)
MODULI = [abs(zero) for zero in F.zeros]
CONSTANT_ONE = LaurentCoefficients.from_mapping({0: 1.0})


def _scan_k(R: float, margin: float) -> int:
    outer = min(float(m) for m in MODULI if m > 1)
    inner = max(float(m) for m in MODULI if m < 1)
    k = 3
    while not (R ** (1 / k) * (1 + margin) < outer and inner < (1 - margin) / R ** (1 / k)):
        k += 2

    return k


def test_choose_k_standard() -> None:
    assert choose_k(2, 1.5, MODULI, 0.05) == 3


def test_choose_k_grows_with_R() -> None:
    R = ((2 + math.sqrt(13)) / 3) ** 3.5

    k = choose_k(2, R, MODULI, 0.05)

    assert k > 3
    assert k == _scan_k(R, 0.05)


@given(st.floats(min_value=1.01, max_value=10.0))
@settings(max_examples=100, deadline=None)
def test_choose_k_is_odd_and_above_m(R: float) -> None:
    k = choose_k(2, R, MODULI, 0.05)

    assert k % 2 == 1 and k > 2
    assert k == _scan_k(R, 0.05)


def test_choose_k_rejects_zero_on_unit_circle() -> None:
    with pytest.raises(ParameterError):
        choose_k(2, 1.5, [1.0, 2.0])


def test_construction_params_standard() -> None:
    params = construction_params(F, 1.5, 0.05)

    assert params.k == 3
    assert params.rho == pytest.approx(1.5 ** (1 / 3))
    assert params.c > 1


@pytest.mark.parametrize("k", [2, 1, 4])
def test_construction_params_rejects_bad_forced_k(k: int) -> None:
    with pytest.raises(ParameterError):
        construction_params(F, 1.5, 0.05, k=k)


@pytest.mark.parametrize("k", [1, 2, 4])
def test_build_psi_rejects_bad_k(generic_base, k: int) -> None:
    with pytest.raises(ParameterError):
        build_psi(generic_base, F, k)


def test_build_psi_band_and_annulus(generic_base) -> None:
    psi = build_psi(generic_base, F, 3)

    assert psi[0].band == 2 + 3 * generic_base[0].band
    assert psi[0].annulus == pytest.approx((1.5 ** (-1 / 3), 1.5 ** (1 / 3)))


def test_psi_is_exact_for_generic_base(generic_base) -> None:
    for form in build_psi(generic_base, F, 3):
        assert abs(residue(form)) <= 1e-12 * form.phi.max_abs


def test_constant_base_form_has_zero_residue() -> None:
    base = symmetric_form({0: 1j})

    psi = build_psi((base, base, base), F, 3)

    assert residue(psi[0]) == 0


def test_k_equal_one_leaves_a_residue(generic_base) -> None:
    psi = build_psi(generic_base, F, 1, check_parameters=False)

    relative = max(abs(residue(form)) / form.phi.max_abs for form in psi)

    assert relative > 1e-3


def test_even_k_breaks_form_symmetry(generic_base) -> None:
    psi = build_psi(generic_base, CONSTANT_ONE, 2, check_parameters=False)

    verification = verify_psi(psi)

    assert verification.symmetry_defect > 0.1
    assert {check.name: check.verdict for check in verification.checks}["psi_form_symmetry"] is Verdict.FAIL


@given(
    st.lists(st.builds(complex, st.floats(-1, 1), st.floats(-1, 1)), min_size=3, max_size=3),
    st.sampled_from([3, 5, 7]),
)
@settings(max_examples=40, deadline=None)
def test_exactness_and_symmetry_propagate(values: list[complex], k: int) -> None:
    base = tuple(symmetric_form({0: v, 1: v * 0.5, 2: v.conjugate()}) for v in values)

    for form in build_psi(base, F, k):
        scale = max(form.phi.max_abs, 1e-300)
        assert abs(residue(form)) <= 1e-12 * scale
        assert symmetry_defect(form.phi, SymmetryMode.FORM) <= 1e-12 * scale


def test_verify_psi_standard(standard_run: ConstructionRun) -> None:
    verification = verify_psi(standard_run.psi, standard_run.config.tolerances, standard_run.working_samples())

    assert verification.passed, [check for check in verification.checks if not check.passed]
    assert verification.conformality_defect < 1e-10
    assert max(verification.residues) < 1e-12


def test_verify_psi_flags_zero_triple() -> None:
    zero = FormOnAnnulus(phi=LaurentCoefficients.zeros(1, (0.5, 2.0)))

    verification = verify_psi((zero, zero, zero))

    assert verification.regularity_min == 0
    assert not verification.passed


def test_lifted_involution_of_standard_psi(standard_run: ConstructionRun) -> None:
    assert lifted_involution_defect(standard_run.psi, standard_run.working_samples()) < 1e-12


def test_lifted_involution_near_the_boundary(standard_run: ConstructionRun) -> None:
    # Coefficient rounding is amplified by up to R^N toward |z^k| = R.
    assert lifted_involution_defect(standard_run.psi, standard_run.annulus_samples()) < 1e-8


def test_metric_ratio_equals_modulus_of_f(standard_run: ConstructionRun) -> None:
    params = standard_run.params
    samples = standard_run.annulus_samples()

    comparison = metric_comparison(standard_run.psi, standard_run.base_triple, F, params.k, samples, params.c)

    assert comparison.max_deviation < 1e-9
    assert comparison.within_bounds
    assert comparison.sample_count == 1000
    modulus = np.abs(multiplier_values(F, samples))
    assert comparison.min_ratio == pytest.approx(modulus.min(), rel=1e-9)


def test_metric_ratio_is_one_for_constant_multiplier(standard_run: ConstructionRun) -> None:
    psi = build_psi(standard_run.base, CONSTANT_ONE, 3)
    samples = random_annulus_samples(1.5 ** (-1 / 3) * 1.01, 1.5 ** (1 / 3) * 0.99, 200)

    comparison = metric_comparison(psi, standard_run.base_triple, CONSTANT_ONE, 3, samples, 1.01)

    assert comparison.min_ratio == pytest.approx(1.0, abs=1e-12)
    assert comparison.max_ratio == pytest.approx(1.0, abs=1e-12)


def test_metric_comparison_rejects_a_vanishing_base(standard_run: ConstructionRun) -> None:
    zero = AnalyticTriple((lambda z: 0.0, lambda z: 0.0, lambda z: 0.0))

    with pytest.raises(RegularityError):
        metric_comparison(standard_run.psi, zero, F, 3, standard_run.working_samples(count=20), 1.01)


def test_gauss_map_factors_through_the_cover(standard_run: ConstructionRun) -> None:
    defect = gauss_factorization_defect(
        standard_run.psi, standard_run.analytic_triple, standard_run.params.k, standard_run.working_samples()
    )

    assert defect < 1e-9


def test_psi_gauss_map_is_z_to_the_k(standard_run: ConstructionRun) -> None:
    z = standard_run.working_samples(count=50)

    np.testing.assert_allclose(gauss_map(LaurentTriple(standard_run.psi), z), z**3, rtol=1e-9)
