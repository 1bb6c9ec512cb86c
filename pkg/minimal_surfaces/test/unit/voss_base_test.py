import numpy as np
import pytest

from minimal_surfaces.application.laurent import evaluate, symmetry_defect
from minimal_surfaces.application.utils import random_annulus_samples
from minimal_surfaces.application.voss import (
    VossData,
    analytic_coefficients,
    classify_probe,
    completeness_probe,
    involution_defect,
    partial_fraction_residues,
    restrict_to_annulus,
    validate_punctures,
    voss_eval,
    voss_eval_at_infinity,
)
from minimal_surfaces.domain.exceptions import (
    DomainError,
    InvalidPunctureError,
    ParameterError,
    PoleError,
    UnitAnnulusError,
)
from minimal_surfaces.domain.types import ProbeVerdict, SymmetryMode


@pytest.fixture(scope="module")
def data() -> VossData:
    return VossData(validate_punctures(2.0, 3.0j))


@pytest.mark.parametrize(
    "alpha, beta, error",
    [
        (0.0, 3.0j, InvalidPunctureError),
        (2.0, 2.0, InvalidPunctureError),
        (2.0, -0.5, InvalidPunctureError),
        (0.5, 3.0j, UnitAnnulusError),
        (2.0, 1.0j, UnitAnnulusError),
    ],
)
def test_validate_punctures_rejects(alpha: complex, beta: complex, error: type[Exception]) -> None:
    with pytest.raises(error):
        validate_punctures(alpha, beta)


def test_punctures_come_in_antipodal_pairs(data: VossData) -> None:
    alpha, beta, inner_alpha, inner_beta = data.punctures

    assert inner_alpha == pytest.approx(-0.5)
    assert inner_beta == pytest.approx(-1 / np.conj(beta))


def test_eta_blows_up_only_at_punctures(data: VossData) -> None:
    with pytest.raises(PoleError):
        data.eta_density(2.0)

    eta, phi = voss_eval(data, 1.0 + 0.5j)

    assert np.isfinite(eta)
    assert phi.shape == (3,)


def test_metric_closed_form(data: VossData) -> None:
    z = np.array([0.3 + 0.2j, 1.0, 1.4j, -2.5 + 1j])
    eta = data.eta_density(z)

    expected = np.abs(eta) * (1 + np.abs(z) ** 2) / np.sqrt(2)

    np.testing.assert_allclose(data.metric_density(z), expected, rtol=1e-13)


def test_involution_compatibility(data: VossData) -> None:
    samples = random_annulus_samples(0.3, 3.5, 200)
    samples = samples[np.min([np.abs(samples - q) for q in data.punctures], axis=0) > 0.05]

    assert involution_defect(data, samples) < 1e-12


def test_chart_at_infinity_is_regular(data: VossData) -> None:
    w = np.array([0.0, 0.05, 0.05j])

    densities = voss_eval_at_infinity(data, w)

    assert np.all(np.sum(np.abs(densities) ** 2, axis=0) > 0)


def test_chart_at_infinity_matches_change_of_variables(data: VossData) -> None:
    w = 0.2 * np.exp(0.9j)
    z = 1 / w

    # dz = -dw / w^2
    np.testing.assert_allclose(voss_eval_at_infinity(data, w), -data.phi_hat(z) / w**2, rtol=1e-12)


def test_restriction_matches_partial_fractions(data: VossData) -> None:
    restricted = restrict_to_annulus(data, 1.5, 48, 4096)
    analytic = analytic_coefficients(data, 48)

    for form, series in zip(restricted, analytic):
        assert np.max(np.abs(form.phi.coeffs - series.coeffs)) < 1e-10


def test_restriction_matches_direct_evaluation(data: VossData) -> None:
    restricted = restrict_to_annulus(data, 1.5, 48, 4096)
    z = random_annulus_samples(1 / 1.2, 1.2, 200)

    direct = z * data.phi_hat(z)
    for j, form in enumerate(restricted):
        np.testing.assert_allclose(evaluate(form.phi, z), direct[j], atol=1e-9)


def test_restricted_forms_are_form_symmetric(data: VossData) -> None:
    for form in restrict_to_annulus(data, 1.5, 48, 4096):
        assert symmetry_defect(form.phi, SymmetryMode.FORM) < 1e-10
        assert form.annulus == pytest.approx((1 / 1.5, 1.5))


@pytest.mark.parametrize("R", [1.0, 2.0, 2.5])
def test_restriction_radius_must_avoid_punctures(data: VossData, R: float) -> None:
    with pytest.raises(DomainError):
        restrict_to_annulus(data, R)


@pytest.mark.parametrize("samples", [100, 128])
def test_restriction_sample_count_must_be_power_of_two(data: VossData, samples: int) -> None:
    with pytest.raises(ParameterError):
        restrict_to_annulus(data, 1.5, 48, samples)


def test_probe_toward_puncture_diverges_logarithmically(data: VossData) -> None:
    epsilons = [1e-2, 1e-3, 1e-4, 1e-5]

    lengths = completeness_probe(data, 2.0, epsilons)
    increments, verdict = classify_probe(epsilons, lengths)

    assert verdict is ProbeVerdict.DIVERGES
    assert max(increments) - min(increments) <= 0.1 * np.mean(increments)
    assert all(b > a for a, b in zip(lengths, lengths[1:]))


def test_probe_toward_regular_point_converges(data: VossData) -> None:
    epsilons = [1e-2, 1e-3, 1e-4, 1e-5]

    lengths = completeness_probe(data, 1.0 + 1.0j, epsilons)

    assert classify_probe(epsilons, lengths)[1] is ProbeVerdict.CONVERGES


def test_probe_rejects_increasing_epsilons(data: VossData) -> None:
    with pytest.raises(ParameterError):
        completeness_probe(data, 2.0, [1e-3, 1e-2])


def test_probe_rejects_epsilon_above_clearance(data: VossData) -> None:
    with pytest.raises(ParameterError):
        completeness_probe(data, 2.0, [1.5, 1e-2])


def test_values_at_the_origin(data: VossData) -> None:
    # eta(0) = i / ((-2)(-3i)(1)(1)) = 1/6
    eta, phi = voss_eval(data, 0.0)

    assert eta == pytest.approx(1 / 6)
    np.testing.assert_allclose(phi, [1 / 12, 1j / 12, 0.0], atol=1e-16)


def test_coefficients_decay_at_the_nearest_pole_rate(data: VossData) -> None:
    # The nearest singularities on either side of |z| = 1 have moduli 2 and 1/2.
    for form in restrict_to_annulus(data, 1.5, 48, 4096):
        outer = np.array([form.phi.coefficient(n) for n in range(34, 41)])
        inner = np.array([form.phi.coefficient(-n) for n in range(34, 41)])

        np.testing.assert_allclose(np.abs(outer[1:] / outer[:-1]), 0.5, atol=1e-3)
        np.testing.assert_allclose(np.abs(inner[1:] / inner[:-1]), 0.5, atol=1e-3)


def test_doubling_the_sample_count_leaves_coefficients_unchanged(data: VossData) -> None:
    coarse = restrict_to_annulus(data, 1.5, 48, 2048)
    fine = restrict_to_annulus(data, 1.5, 48, 4096)

    for a, b in zip(coarse, fine):
        assert np.max(np.abs(a.phi.coeffs - b.phi.coeffs)) < 1e-12


@pytest.mark.parametrize("numerator", [lambda z: 1.0, lambda z: z * z], ids=["eta", "z^2 eta"])
def test_partial_fraction_residues_sum_to_zero(data: VossData, numerator) -> None:
    # Both densities decay like z^-2 at infinity.
    residues = partial_fraction_residues(data, numerator)

    assert set(residues) == set(data.punctures)
    assert abs(sum(residues.values())) < 1e-14


def test_involution_defect_is_invariant_under_the_involution(data: VossData) -> None:
    z = random_annulus_samples(1 / 1.5, 1.5, 100, seed=4)

    for point in z:
        here = involution_defect(data, [point])
        there = involution_defect(data, [-1.0 / np.conj(point)])

        assert here < 1e-14 and there < 1e-14
        assert here == pytest.approx(there, abs=1e-15)
