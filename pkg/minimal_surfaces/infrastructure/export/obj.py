"""
Wavefront OBJ text: a "# key=value" header, "v x y z" lines with 17 significant digits and
1-based "f i j k" triangles. The output is byte-for-byte deterministic for a fixed mesh.
"""
from pathlib import Path

import numpy as np
from loguru import logger

from minimal_surfaces.domain.immersion import Mesh
from minimal_surfaces.domain.types import MeshKind


def render_obj(mesh: Mesh) -> str:
    header = dict(mesh.metadata)
    header.update(
        {
            "kind": str(mesh.kind),
            "vertices": str(mesh.vertex_count),
            "faces": str(mesh.face_count),
            "quotient_pairs": str(len(mesh.quotient_pairs)),
        }
    )

    lines = [f"# {key}={header[key]}" for key in sorted(header)]
    lines += [f"v {x:.17g} {y:.17g} {z:.17g}" for x, y, z in mesh.vertices.tolist()]
    lines += [f"f {a + 1} {b + 1} {c + 1}" for a, b, c in mesh.faces.tolist()]

    return "\n".join(lines) + "\n"


def export_obj(mesh: Mesh, path: str | Path) -> Path:
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with path.open("w", encoding="utf-8", newline="\n") as handle:
            handle.write(render_obj(mesh))
    except OSError:
        logger.exception(f"Failed to write mesh to {path}")
        raise

    logger.info(f"Wrote {mesh.kind} mesh to {path}.")

    return path


def parse_obj(path: str | Path) -> Mesh:
    """Read back a file written by `export_obj`; quotient pairs are not stored and come back empty."""
    metadata: dict[str, str] = {}
    vertices: list[tuple[float, float, float]] = []
    faces: list[tuple[int, int, int]] = []

    for line in Path(path).read_text(encoding="utf-8").splitlines():
        if line.startswith("# ") and "=" in line:
            key, value = line[2:].split("=", 1)
            metadata[key] = value
        elif line.startswith("v "):
            x, y, z = (float(token) for token in line.split()[1:4])
            vertices.append((x, y, z))
        elif line.startswith("f "):
            a, b, c = (int(token) - 1 for token in line.split()[1:4])
            faces.append((a, b, c))

    kind = MeshKind(metadata.pop("kind", MeshKind.FULL))
    for key in ("vertices", "faces", "quotient_pairs"):
        metadata.pop(key, None)

    return Mesh(
        vertices=np.array(vertices).reshape(-1, 3),
        faces=faces,
        quotient_pairs=np.empty((0, 2), dtype=np.int64),
        kind=kind,
        metadata=metadata,
    )
