"""Orienting a triangulation by relabeling tetrahedron vertices."""

from collections.abc import Sequence

from mtorus.core.orientation import solve_signs
from mtorus.triangulation.models import Tetrahedron, Triangulation3
from mtorus.triangulation.perm import IDENTITY, Perm, compose, inverse, sign

SWAP_01: Perm = (1, 0, 2, 3)


def orientation_signs(t: Triangulation3) -> dict[int, int] | None:
    """Signs making every gluing orientation-reversing, or None for a non-orientable one."""
    constraints = [(g.tet, g.other, -sign(g.perm)) for g in t.face_gluings()]
    return solve_signs(range(t.size), constraints)


def is_orientable(t: Triangulation3) -> bool:
    return orientation_signs(t) is not None


def relabel(t: Triangulation3, perms: Sequence[Perm]) -> Triangulation3:
    """Rename vertex ``v`` of tetrahedron ``i`` to ``perms[i][v]``."""
    neighbors: list[list[int | None]] = [[None] * 4 for _ in range(t.size)]
    gluings: list[list[Perm | None]] = [[None] * 4 for _ in range(t.size)]
    for i, tet in enumerate(t.tetrahedra):
        for f in tet.glued_faces:
            u, p = t.glue(i, f)
            face = perms[i][f]
            neighbors[i][face] = u
            gluings[i][face] = compose(perms[u], compose(p, inverse(perms[i])))
    return Triangulation3(
        tetrahedra=[
            Tetrahedron(neighbors=(n[0], n[1], n[2], n[3]), gluings=(g[0], g[1], g[2], g[3]))
            for n, g in zip(neighbors, gluings, strict=True)
        ],
        provenance=t.provenance,
    )


def orient(t: Triangulation3) -> Triangulation3 | None:
    """A copy whose every gluing permutation is odd, or None if ``t`` is not orientable."""
    signs = orientation_signs(t)
    if signs is None:
        return None
    return relabel(t, [IDENTITY if signs[i] > 0 else SWAP_01 for i in range(t.size)])
