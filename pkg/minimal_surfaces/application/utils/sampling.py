import numpy as np
from numpy.typing import NDArray

from minimal_surfaces.domain.exceptions import ParameterError


def annulus_grid(r_in: float, r_out: float, n_r: int, n_theta: int) -> NDArray[np.complex128]:
    """Polar grid with n_r radii spread geometrically over [r_in, r_out] and n_theta equispaced angles."""
    if n_r < 1 or n_theta < 1:
        raise ParameterError(f"Grid sizes must be positive, got n_r={n_r}, n_theta={n_theta}.")
    if not (0.0 < r_in <= r_out):
        raise ParameterError(f"Invalid radial range [{r_in}, {r_out}].")

    radii = np.geomspace(r_in, r_out, n_r)
    theta = 2.0 * np.pi * np.arange(n_theta) / n_theta

    return (radii[:, None] * np.exp(1j * theta)[None, :]).reshape(-1)


def random_annulus_samples(r_in: float, r_out: float, count: int, seed: int = 0) -> NDArray[np.complex128]:
    """`count` points with log-uniform modulus in (r_in, r_out) and uniform argument."""
    if not (0.0 < r_in < r_out):
        raise ParameterError(f"Invalid radial range ({r_in}, {r_out}).")

    rng = np.random.default_rng(seed)
    log_r = rng.uniform(np.log(r_in), np.log(r_out), count)
    theta = rng.uniform(0.0, 2.0 * np.pi, count)

    return np.exp(log_r + 1j * theta)


def shrink(annulus: tuple[float, float], factor: float) -> tuple[float, float]:
    """The annulus moved inward by a relative `factor` on both sides."""
    r_in, r_out = annulus

    return r_in * (1.0 + factor), r_out * (1.0 - factor)
