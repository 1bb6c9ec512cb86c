"""
Triangle meshes of X over the annulus and over the Moebius strip A(rho)/<I>.

The quotient uses the fundamental domain 1 <= |z| <= rho (1 - inset). I restricts to z -> -z
on the unit circle, so vertex (0, j) is glued to vertex (0, j + n_theta/2).
"""
from collections import deque

import numpy as np
from loguru import logger
from numpy.typing import NDArray
from pydantic import BaseModel
from tqdm import tqdm

from minimal_surfaces.domain.exceptions import ParameterError
from minimal_surfaces.domain.immersion import ImmersionData, Mesh
from minimal_surfaces.domain.types import MeshKind
from minimal_surfaces.settings import settings

from .surface import evaluate_X


class Orientation(BaseModel):
    orientable: bool
    manifold: bool
    components: int


def mesh_radii(X: ImmersionData, n_r: int, n_theta: int, boundary_inset: float, quotient: bool) -> NDArray[np.float64]:
    """Ring radii of the mesh; ring 0 sits on the unit circle in quotient mode.

    Raises:
        ParameterError: n_r < 2, n_theta < 8 or odd, or an inset that empties the annulus.
    """
    if n_r < 2 or n_theta < 8 or n_theta % 2:
        raise ParameterError(f"Need n_r >= 2 and an even n_theta >= 8, got n_r={n_r}, n_theta={n_theta}.")
    if not (0.0 < boundary_inset < 0.5):
        raise ParameterError(f"boundary_inset must lie in (0, 0.5), got {boundary_inset}.")

    r_in, r_out = X.annulus
    outer = r_out * (1.0 - boundary_inset)
    inner = 1.0 if quotient else r_in * (1.0 + boundary_inset)
    if not inner < outer:
        raise ParameterError(f"Degenerate radial range [{inner}, {outer}] for inset {boundary_inset}.")

    return np.linspace(inner, outer, n_r)


def build_mesh(
    X: ImmersionData,
    n_r: int,
    n_theta: int,
    boundary_inset: float,
    quotient: bool,
    metadata: dict[str, str] | None = None,
) -> Mesh:
    radii = mesh_radii(X, n_r, n_theta, boundary_inset, quotient)
    theta = 2.0 * np.pi * np.arange(n_theta) / n_theta
    ring = np.exp(1j * theta)

    rows = [
        evaluate_X(X, r * ring)
        for r in tqdm(radii, desc="Evaluating X", disable=not settings.SHOW_PROGRESS, leave=False)
    ]
    vertices = np.concatenate(rows, axis=0)

    index = np.arange(n_r * n_theta).reshape(n_r, n_theta)
    half = n_theta // 2
    if quotient:
        index[0] = np.arange(n_theta) % half
        pairs = np.stack([np.arange(half), np.arange(half) + half], axis=1)
    else:
        pairs = np.empty((0, 2), dtype=np.int64)

    faces = []
    for i in range(n_r - 1):
        for j in range(n_theta):
            a, b = index[i, j], index[i, (j + 1) % n_theta]
            c, d = index[i + 1, (j + 1) % n_theta], index[i + 1, j]
            faces.append((a, b, c))
            faces.append((a, c, d))

    kind = MeshKind.QUOTIENT if quotient else MeshKind.FULL
    logger.info(f"Built {kind} mesh: {vertices.shape[0]} vertices, {len(faces)} faces.")

    return Mesh(vertices=vertices, faces=faces, quotient_pairs=pairs, kind=kind, metadata=metadata or {})


def quotient_pair_defect(mesh: Mesh) -> float:
    """max ||X(z) - X(-z)|| over the glued unit-circle vertices; 0 for a full mesh."""
    if not mesh.quotient_pairs.size:
        return 0.0

    left, right = mesh.vertices[mesh.quotient_pairs[:, 0]], mesh.vertices[mesh.quotient_pairs[:, 1]]

    return float(np.max(np.linalg.norm(left - right, axis=1)))


def is_orientable(faces: NDArray[np.int64]) -> Orientation:
    """Propagate face orientations across shared edges breadth-first.

    Two faces agree when they traverse their common edge in opposite directions. A face whose
    required flip contradicts an earlier assignment makes the surface nonorientable.
    """
    faces = np.asarray(faces, dtype=np.int64)
    edges: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for f, (a, b, c) in enumerate(faces.tolist()):
        for u, v in ((a, b), (b, c), (c, a)):
            key = (min(u, v), max(u, v))
            edges.setdefault(key, []).append((f, 1 if u < v else -1))

    manifold = all(len(users) <= 2 for users in edges.values())

    neighbours: list[list[tuple[int, bool]]] = [[] for _ in range(len(faces))]
    for users in edges.values():
        for f, direction in users:
            for g, other in users:
                if g != f:
                    neighbours[f].append((g, direction == other))

    orientation = [0] * len(faces)
    orientable, components = True, 0
    for seed in range(len(faces)):
        if orientation[seed]:
            continue
        components += 1
        orientation[seed] = 1
        queue = deque([seed])
        while queue:
            f = queue.popleft()
            for g, same_direction in neighbours[f]:
                required = -orientation[f] if same_direction else orientation[f]
                if not orientation[g]:
                    orientation[g] = required
                    queue.append(g)
                elif orientation[g] != required:
                    orientable = False

    return Orientation(orientable=orientable, manifold=manifold, components=components)
