"""
Run services behind the CLI and the pipeline steps. Each returns a `RunReport`; configuration
problems surface as exceptions (exit code 2), failed checks as a failing report (exit code 1).
"""
from pathlib import Path
from typing import Any

import numpy as np
from loguru import logger

from minimal_surfaces.application.construction import gauss_factorization_defect, metric_comparison, verify_psi
from minimal_surfaces.application.immersion import (
    build_mesh,
    evaluate_X,
    gauss_report,
    harmonicity_defect,
    involution_compat_defect,
    is_orientable,
    period_defect,
    quotient_pair_defect,
)
from minimal_surfaces.application.laurent import symmetry_defect
from minimal_surfaces.application.multiplier import (
    coefficients,
    function_symmetry_holds,
    residue_invariant,
    solve_m2,
    zero_moduli,
    zeros_in_closed_annulus,
    zeros_on_unit_circle,
)
from minimal_surfaces.application.utils import annulus_grid, shrink
from minimal_surfaces.application.voss import (
    analytic_coefficients,
    classify_probe,
    completeness_probe,
    involution_defect,
    voss_eval_at_infinity,
)
from minimal_surfaces.application.weierstrass import LaurentTriple, conformality_defect, gauss_map
from minimal_surfaces.domain.config import RunConfig
from minimal_surfaces.domain.exceptions import NoValidRootError, NonExactFormError, ParameterError
from minimal_surfaces.domain.immersion import Mesh
from minimal_surfaces.domain.multiplier import MultiplierParams
from minimal_surfaces.domain.reports import CheckRecord, ProbeReport, RunReport
from minimal_surfaces.domain.types import ProbeVerdict, SymmetryMode
from minimal_surfaces.infrastructure.export import export_obj

from .context import ConstructionRun

GAUSS_GRID = (50, 200)


def exit_code(report: RunReport) -> int:
    return 0 if report.passed else 1


def run_multiplier_check(m1: str, D: int | None = None) -> RunReport:
    """Exact checks of the multiplier f for the root m2 of the residue equation."""
    report = RunReport(command="multiplier", config={"m1": m1, "D": D})

    try:
        m2, other = solve_m2(m1)
    except NoValidRootError as error:
        logger.error(f"No admissible m2 for m1 = {m1}: {error}")
        report.add(CheckRecord.exact("m2_solvable", "The residue equation has a real root m2 != 0", False, detail=str(error)))

        return report

    params = coefficients(m1, m2)
    report.values.update(
        {
            "m1": str(params.m1),
            "m2": str(m2),
            "other_root": str(other),
            "b": {str(n): str(value) for n, value in sorted(params.b.items())},
            "zeros": [str(zero) for zero in params.zeros],
            "zero_moduli": [float(modulus) for modulus in zero_moduli(params)],
            "field": params.field,
        }
    )
    if D is not None and params.field != D:
        logger.warning(f"m2 = {m2} lies in Q(sqrt({params.field})), not the configured Q(sqrt({D})).")
        report.values["field_mismatch"] = True

    for check in _multiplier_checks(params):
        report.add(check)
    report.add(
        CheckRecord.exact(
            "residue_invariant",
            "(1 - m1^2)(1 - m2^2) - 2 m1 m2 = 0",
            residue_invariant(params.m1, m2) == 0 and residue_invariant(params.m1, other) == 0,
        )
    )

    return report


def run_verify(config: RunConfig) -> RunReport:
    return _verify(ConstructionRun.build(config), "verify")


def _verify(run: ConstructionRun, command: str) -> RunReport:
    report = _new_report(command, run.config)
    tolerances = run.config.tolerances

    _check_base(run, report)
    _check_multiplier(run, report)

    params = run.params
    report.values.update({"k": params.k, "rho": params.rho, "c": params.c})

    verification = verify_psi(run.psi, tolerances, run.working_samples())
    for check in verification.checks:
        report.add(check)

    comparison = metric_comparison(run.psi, run.base_triple, run.multiplier, params.k, run.annulus_samples(), params.c)
    report.values["metric_comparison"] = comparison.model_dump()
    report.add(
        CheckRecord.upper_bound(
            "metric_ratio_equals_modulus", "ds_0 = |f| T_k^*(ds)", comparison.max_deviation, tolerances.metric
        )
    )
    report.add(
        CheckRecord.upper_bound(
            "metric_ratio_bounds",
            "(1/c^2) T_k^*(ds^2) <= ds_0^2 <= c^2 T_k^*(ds^2)",
            max(comparison.max_ratio, 1.0 / comparison.min_ratio),
            params.c,
        )
    )
    report.add(
        CheckRecord.upper_bound(
            "gauss_factorization",
            "The Gauss map of Psi is g o T_k",
            gauss_factorization_defect(run.psi, run.analytic_triple, params.k, run.working_samples()),
            tolerances.gauss,
        )
    )

    try:
        _ = run.immersion
    except NonExactFormError as error:
        report.add(CheckRecord.exact("immersion_integrable", "X = Re int_1^z Psi is single valued", False, detail=str(error)))

        return report

    _check_immersion(run, report)
    _check_gauss(run, report)

    return report


def run_mesh(config: RunConfig) -> tuple[RunReport, Path | None]:
    """Verify, then mesh the quotient or the full annulus; nothing is written unless every check passes."""
    run = ConstructionRun.build(config)
    report = _verify(run, "mesh")
    if not report.passed:
        logger.error("Verification failed; refusing to write a mesh.")

        return report, None

    mesh = build_mesh(
        run.immersion,
        config.mesh.n_r,
        config.mesh.n_theta,
        config.mesh.boundary_inset,
        config.mesh.quotient,
        metadata=_mesh_metadata(run, report),
    )
    _check_mesh(mesh, config, report)
    if not report.passed:
        logger.error("Mesh checks failed; refusing to write a mesh.")

        return report, None

    path = export_obj(mesh, config.output.mesh_path)
    report.values["mesh_path"] = str(path)

    return report, path


def run_probe(config: RunConfig, target: str | None = None, epsilons: list[float] | None = None) -> RunReport:
    """Metric lengths toward a puncture (or any named point) and the divergence verdict.

    Raises:
        ParameterError: Unknown target or an invalid epsilon list.
    """
    run = ConstructionRun.build(config)
    target = config.probe.target if target is None else target
    epsilons = config.probe.epsilons if epsilons is None else epsilons

    point, is_puncture = _probe_target(run, target)
    lengths = completeness_probe(run.data, point, epsilons)
    increments, verdict = classify_probe(epsilons, lengths)

    probe = ProbeReport(target=point, epsilons=list(epsilons), lengths=lengths, increments=increments, verdict=verdict)
    report = _new_report("probe", config)
    report.values["probe"] = probe.model_dump(mode="json")
    logger.info(f"Probe toward {target}: {verdict}")

    if is_puncture:
        report.add(
            CheckRecord.exact(
                "metric_complete_toward_target",
                "ds^2 is complete at the punctures",
                verdict is ProbeVerdict.DIVERGES,
                detail=f"increments={increments}",
            )
        )

    return report


def dump_coeffs(config: RunConfig) -> RunReport:
    run = ConstructionRun.build(config)
    report = _new_report("coeffs", config)

    report.values.update(
        {
            "base": [_series_dump(form.phi) for form in run.base],
            "multiplier": {str(n): str(value) for n, value in sorted(run.multiplier.b.items())},
            "k": run.params.k,
            "psi": [_series_dump(form.phi) for form in run.psi],
        }
    )

    return report


def _new_report(command: str, config: RunConfig) -> RunReport:
    return RunReport(command=command, config=config.model_dump(mode="json"), config_hash=config.config_hash())


def _multiplier_checks(params: MultiplierParams, rho: float | None = None) -> list[CheckRecord]:
    b = params.b
    checks = [
        CheckRecord.exact(
            "multiplier_poles",
            "The only poles of f are 0 and infinity",
            set(b) <= set(range(-params.m, params.m + 1)) and b[params.m] != 0 and b[-params.m] != 0,
        ),
        CheckRecord.exact("multiplier_function_symmetry", "f o I = conj(f)", function_symmetry_holds(params)),
        CheckRecord.exact(
            "multiplier_no_zero_on_unit_circle", "f(z) != 0 for |z| = 1", not zeros_on_unit_circle(params)
        ),
        CheckRecord.exact("multiplier_residue", "Residue(f(z)/z dz, 0) = 0", params.residue == 0),
    ]
    if rho is not None:
        checks.append(
            CheckRecord.exact(
                "multiplier_zero_free_annulus",
                "f never vanishes on the closure of A(R^(1/k))",
                not zeros_in_closed_annulus(params, rho),
            )
        )

    return checks


def _check_base(run: ConstructionRun, report: RunReport) -> None:
    tolerances = run.config.tolerances
    samples = run.base_working_samples()

    report.add(
        CheckRecord.upper_bound(
            "base_involution",
            "g(I z) = -1/conj(g(z)) and I^*(eta) = -conj(eta g^2)",
            involution_defect(run.data, samples),
            tolerances.symmetry,
        )
    )

    analytic = analytic_coefficients(run.data, run.config.truncation.N)
    oracle = max(float(np.max(np.abs(form.phi.coeffs - series.coeffs))) for form, series in zip(run.base, analytic))
    report.add(
        CheckRecord.upper_bound(
            "base_coefficient_oracle", "Laurent coefficients of phi_j by partial fractions", oracle, tolerances.oracle
        )
    )
    report.add(
        CheckRecord.upper_bound(
            "base_form_symmetry",
            "I^*(Phi_j) = conj(Phi_j)",
            max(symmetry_defect(form.phi, SymmetryMode.FORM) for form in run.base),
            tolerances.symmetry,
        )
    )
    report.add(
        CheckRecord.upper_bound(
            "base_conformality",
            "Phi_1^2 + Phi_2^2 + Phi_3^2 = 0",
            conformality_defect(run.base_triple, samples),
            tolerances.conformality,
        )
    )

    chart = np.concatenate([[0.0], 0.1 * np.exp(2.0j * np.pi * np.arange(16) / 16)])
    at_infinity = float(np.min(np.sum(np.abs(voss_eval_at_infinity(run.data, chart)) ** 2, axis=0)))
    report.add(CheckRecord.lower_bound("base_regular_at_infinity", "ds^2 is regular at z = infinity", at_infinity, 0.0))


def _check_multiplier(run: ConstructionRun, report: RunReport) -> None:
    params = run.multiplier
    report.values["multiplier"] = {"m1": str(params.m1), "m2": str(params.m2), "field": params.field}
    if params.field != run.config.multiplier.D:
        logger.warning(f"m2 = {params.m2} lies in Q(sqrt({params.field})), not Q(sqrt({run.config.multiplier.D})).")
        report.values["field_mismatch"] = True

    for check in _multiplier_checks(params, run.params.rho):
        report.add(check)


def _check_immersion(run: ConstructionRun, report: RunReport) -> None:
    tolerances = run.config.tolerances
    X = run.immersion

    report.add(
        CheckRecord.exact("base_point", "X(1) = 0", bool(np.all(evaluate_X(X, X.base_point) == 0.0)))
    )
    report.add(
        CheckRecord.upper_bound("no_real_periods", "Psi_j have no real periods", period_defect(run.psi), tolerances.period)
    )
    report.add(
        CheckRecord.upper_bound(
            "involution_compatibility",
            "X o I = X",
            involution_compat_defect(X, run.annulus_samples(count=500, seed=3)),
            tolerances.compat,
        )
    )

    h = tolerances.harmonicity_step
    coarse, fine = harmonicity_defect(X, 2.0 * h), harmonicity_defect(X, h)
    ratio = coarse / fine if fine > 0 else float("inf")
    report.values["harmonicity"] = {"h": h, "defect": fine, "defect_2h": coarse, "ratio": ratio}
    report.add(CheckRecord.upper_bound("harmonicity", "X is harmonic in isothermal parameters", fine, tolerances.harmonicity))
    report.add(
        CheckRecord.exact(
            "harmonicity_order", "Five-point Laplacian error is O(h^2)", 3.0 <= ratio <= 5.0, detail=f"ratio={ratio:.4f}"
        )
    )


def _check_gauss(run: ConstructionRun, report: RunReport) -> None:
    tolerance = run.config.tolerances.gauss
    R = run.config.annulus.R
    inset = run.config.mesh.boundary_inset

    grid = annulus_grid(*shrink(run.params.annulus, inset), *GAUSS_GRID)
    values = gauss_map(LaurentTriple(run.psi), grid)
    gauss = gauss_report(run.data.config, run.params.k, R, values)
    report.values["gauss"] = gauss.model_dump(mode="json")

    low, high = gauss.sampled_modulus_range
    report.add(
        CheckRecord.upper_bound(
            "gauss_image_containment", "g o T_k maps A(rho) into A(R)", max(high - R, 1.0 / R - low, 0.0), tolerance
        )
    )
    report.add(
        CheckRecord.upper_bound(
            "gauss_clearance",
            "g o T_k omits alpha, beta, -1/conj(alpha), -1/conj(beta)",
            max(max(c - d for c, d in zip(gauss.clearances, gauss.sampled_min_distances)), 0.0),
            tolerance,
        )
    )
    report.add(
        CheckRecord.exact(
            "projective_pairing", "The omitted values are two points of RP^2", len(gauss.projective_classes) == 2
        )
    )


def _check_mesh(mesh: Mesh, config: RunConfig, report: RunReport) -> None:
    orientation = is_orientable(mesh.faces)
    report.values["mesh"] = {
        "kind": str(mesh.kind),
        "vertices": mesh.vertex_count,
        "faces": mesh.face_count,
        **orientation.model_dump(),
    }

    expected = "nonorientable" if config.mesh.quotient else "orientable"
    report.add(
        CheckRecord.exact(
            "mesh_orientability",
            "A(rho)/<I> is a Moebius strip" if config.mesh.quotient else "The annulus A(rho) is orientable",
            orientation.orientable != config.mesh.quotient and orientation.manifold,
            detail=f"expected {expected}, manifold={orientation.manifold}",
        )
    )
    if config.mesh.quotient:
        report.add(
            CheckRecord.upper_bound(
                "quotient_gluing", "X(z) = X(-z) for |z| = 1", quotient_pair_defect(mesh), config.tolerances.compat
            )
        )


def _mesh_metadata(run: ConstructionRun, report: RunReport) -> dict[str, str]:
    tolerances = run.config.tolerances

    return {
        "config_hash": report.config_hash or "",
        "k": str(run.params.k),
        "R": repr(run.config.annulus.R),
        "rho": repr(run.params.rho),
        "tolerances": ",".join(f"{name}:{value!r}" for name, value in tolerances.model_dump().items()),
    }


def _probe_target(run: ConstructionRun, target: str) -> tuple[complex, bool]:
    inner_alpha, inner_beta = run.data.config.inner
    named = {
        "alpha": run.data.config.alpha,
        "beta": run.data.config.beta,
        "alpha_inner": inner_alpha,
        "beta_inner": inner_beta,
    }
    if target in named:
        return named[target], True

    try:
        point = complex(target.replace(" ", ""))
    except ValueError as error:
        raise ParameterError(f"Unknown probe target '{target}'; use {sorted(named)} or a complex number.") from error

    return point, any(abs(point - q) <= 1e-12 * max(1.0, abs(q)) for q in named.values())


def _series_dump(series: Any) -> dict[str, Any]:
    return {
        "band": series.band,
        "annulus": [series.r_in, series.r_out],
        "coeffs": [[float(a.real), float(a.imag)] for a in series.coeffs],
    }
