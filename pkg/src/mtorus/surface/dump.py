"""OFF-style text dump of K with its pairing table, for inspection and diffs."""

import math

from mtorus.surface.models import SurfaceComplex


def dump_off(k: SurfaceComplex) -> str:
    """Vertices on stacked unit circles, triangles by vertex id, pairs as trailing comments."""
    ids = sorted(k.canonical)
    position = {v: i for i, v in enumerate(ids)}
    coordinates: dict[int, tuple[float, float, float]] = {}
    for circle in k.circles:
        n = len(circle)
        for j in range(n):
            angle = 2 * math.pi * j / n
            coordinates[circle.vertex(j)] = (math.cos(angle), math.sin(angle), float(circle.index))

    lines = ["OFF", f"{len(ids)} {len(k.triangles)} {len(k.edges)}"]
    lines += ["{:.6f} {:.6f} {:.6f}".format(*coordinates[v]) for v in ids]
    lines += [
        "3 " + " ".join(str(position[c]) for c in tri.corners) for tri in k.triangles
    ]
    lines += [
        f"# identify {position[v]} {position[w]}" for v, w in sorted(k.canonical.items()) if v != w
    ]
    lines += [
        f"# pair {p.first} {p.second} " + " ".join(str(c) for c in p.corners) for p in k.pairs
    ]
    return "\n".join(lines) + "\n"
