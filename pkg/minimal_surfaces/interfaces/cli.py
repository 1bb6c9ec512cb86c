"""
Command line entry point: `minimal-surfaces {multiplier,verify,mesh,probe,coeffs}`.

The structured report goes to stdout (and to --out when given); logs go to stderr.
Exit codes: 0 all checks pass, 1 a check failed, 2 invalid configuration or parameters.
"""
import sys
from collections.abc import Callable
from functools import wraps
from pathlib import Path
from typing import Any

import click
from loguru import logger

from minimal_surfaces.application.runs import (
    dump_coeffs,
    exit_code,
    run_mesh,
    run_multiplier_check,
    run_probe,
    run_verify,
)
from minimal_surfaces.domain.config import RunConfig
from minimal_surfaces.domain.exceptions import (
    DegenerateEquationError,
    DomainError,
    ImproperlyConfigured,
    InvalidPunctureError,
    ParameterError,
    UnitAnnulusError,
    ZeroInAnnulusError,
)
from minimal_surfaces.domain.reports import RunReport
from minimal_surfaces.infrastructure.config import apply_overrides, load_run_config
from minimal_surfaces.infrastructure.export import write_report
from minimal_surfaces.settings import settings

CONFIGURATION_ERRORS = (
    ImproperlyConfigured,
    InvalidPunctureError,
    UnitAnnulusError,
    ParameterError,
    DomainError,
    DegenerateEquationError,
    ZeroInAnnulusError,
)

EXIT_CONFIGURATION = 2


def configure_logging(level: str | None = None) -> None:
    logger.remove()
    logger.add(sys.stderr, level=level or settings.LOG_LEVEL)


def _exits_on_configuration_errors(command: Callable[..., int]) -> Callable[..., None]:
    @wraps(command)
    def wrapper(*args: Any, **kwargs: Any) -> None:
        try:
            code = command(*args, **kwargs)
        except CONFIGURATION_ERRORS as error:
            logger.error(f"{type(error).__name__}: {error}")
            sys.exit(EXIT_CONFIGURATION)

        sys.exit(code)

    return wrapper


def _load(config_path: Path | None, **overrides: Any) -> RunConfig:
    config = load_run_config(config_path or settings.DEFAULT_CONFIG_PATH)
    if any(value is not None for value in overrides.values()):
        config = apply_overrides(config, **overrides)

    return config


def _emit(report: RunReport, out: Path | None) -> int:
    click.echo(report.model_dump_json(indent=2))
    if out is not None:
        write_report(report, out)

    for check in report.failed():
        logger.error(f"FAILED {check.name}: {check.value:.6g} {check.relation} {check.tolerance:.6g} ({check.anchor})")

    return exit_code(report)


config_option = click.option(
    "--config", "config_path", type=click.Path(path_type=Path), default=None, help="TOML run configuration."
)
out_option = click.option("--out", type=click.Path(path_type=Path), default=None, help="Also write the report here.")


@click.group()
@click.option("--log-level", default=None, help="Overrides LOG_LEVEL.")
def cli(log_level: str | None) -> None:
    """Complete nonorientable minimal surfaces whose generalized Gauss map omits two points of RP^2."""
    configure_logging(log_level)


@cli.command()
@click.option("--m1", default="2", show_default=True, help="Rational m1, e.g. 2 or 3/2.")
@click.option("--D", "field", type=int, default=13, show_default=True, help="Expected field Q(sqrt(D)) of m2.")
@out_option
@_exits_on_configuration_errors
def multiplier(m1: str, field: int, out: Path | None) -> int:
    """Exact checks of the multiplier f(z) = (z - m1)(z - m2)(m1 z + 1)(m2 z + 1) / z^2."""
    return _emit(run_multiplier_check(m1, field), out)


@cli.command()
@config_option
@out_option
@click.option("--k", type=int, default=None, help="Override the covering degree.")
@_exits_on_configuration_errors
def verify(config_path: Path | None, out: Path | None, k: int | None) -> int:
    """Run every check of the construction and report the verdicts."""
    config = _load(config_path, k=k)

    return _emit(run_verify(config), out or Path(config.output.report_path))


@cli.command()
@config_option
@out_option
@click.option("--k", type=int, default=None, help="Override the covering degree.")
@click.option("--quotient/--full", default=None, help="Mesh the Moebius strip or the whole annulus.")
@click.option("--mesh-path", type=click.Path(path_type=Path), default=None, help="Override output.mesh_path.")
@_exits_on_configuration_errors
def mesh(config_path: Path | None, out: Path | None, k: int | None, quotient: bool | None, mesh_path: Path | None) -> int:
    """Verify, then write the OBJ mesh of the quotient or of the full annulus."""
    config = _load(config_path, k=k, quotient=quotient, mesh_path=mesh_path)
    report, _ = run_mesh(config)

    return _emit(report, out or Path(config.output.report_path))


@cli.command()
@config_option
@out_option
@click.option("--target", default=None, help="alpha, beta, alpha_inner, beta_inner or a complex number.")
@click.option("--eps", "epsilons", type=float, multiple=True, help="Distances to stop at, strictly decreasing.")
@_exits_on_configuration_errors
def probe(config_path: Path | None, out: Path | None, target: str | None, epsilons: tuple[float, ...]) -> int:
    """Metric length toward a puncture: logarithmic growth means the metric is complete there."""
    config = _load(config_path)

    return _emit(run_probe(config, target, list(epsilons) or None), out)


@cli.command()
@config_option
@out_option
@click.option("--k", type=int, default=None, help="Override the covering degree.")
@_exits_on_configuration_errors
def coeffs(config_path: Path | None, out: Path | None, k: int | None) -> int:
    """Dump the base, multiplier and Psi Laurent coefficients."""
    return _emit(dump_coeffs(_load(config_path, k=k)), out)


if __name__ == "__main__":
    cli()
