"""Writing SnapPea triangulation files."""

import logging

from mtorus.snappea.errors import SnapPeaError
from mtorus.snappea.models import CuspType, SnapPeaFile, SnapPeaTetrahedron
from mtorus.triangulation.links import LinkReport, vertex_links
from mtorus.triangulation.models import Triangulation3
from mtorus.triangulation.orient import orient

logger = logging.getLogger(__name__)

_CUSP_TYPES: dict[str, CuspType] = {"torus": "torus", "Klein bottle": "Klein"}


def cusp_assignment(
    links: LinkReport,
) -> tuple[dict[tuple[int, int], int], tuple[CuspType, ...]]:
    """Cusp index of every (tetrahedron, vertex) corner and the cusp types in index order.

    Torus cusps come first, then Klein bottle cusps; finite vertices get -1.
    """
    for link in links.ideal:
        if link.surface not in _CUSP_TYPES:
            raise SnapPeaError(f"vertex orbit {link.orbit} has a {link.surface} link")
    ordered = sorted(links.ideal, key=lambda link: (link.surface != "torus", link.orbit))
    index = {link.orbit: k for k, link in enumerate(ordered)}
    corners = {
        corner: index.get(link.orbit, -1) for link in links.links for corner in link.corners
    }
    return corners, tuple(_CUSP_TYPES[link.surface] for link in ordered)


def to_snappea_file(t: Triangulation3, name: str) -> SnapPeaFile:
    """Relabel to an oriented triangulation when possible and collect the file fields."""
    if not t.is_closed:
        tet, face = t.unglued_faces()[0]
        raise SnapPeaError(f"tetrahedron {tet} face {face} is unglued")
    oriented = orient(t)
    source = oriented if oriented is not None else t
    corners, cusps = cusp_assignment(vertex_links(source))
    tetrahedra = []
    for i in range(source.size):
        glued = [source.glue(i, f) for f in range(4)]
        tetrahedra.append(
            SnapPeaTetrahedron(
                neighbors=(glued[0][0], glued[1][0], glued[2][0], glued[3][0]),
                perms=(glued[0][1], glued[1][1], glued[2][1], glued[3][1]),
                cusps=(corners[(i, 0)], corners[(i, 1)], corners[(i, 2)], corners[(i, 3)]),
            )
        )
    return SnapPeaFile(
        name=name,
        orientability="oriented_manifold" if oriented is not None else "nonorientable_manifold",
        cusps=cusps,
        tetrahedra=tuple(tetrahedra),
    )


def write_snappea(t: Triangulation3, name: str) -> str:
    text = to_snappea_file(t, name).render()
    logger.debug("wrote SnapPea file %s with %d tetrahedra", name, t.size)
    return text


class SnapPeaWriter:
    """TriangulationWriter for SnapPea ``.tri`` files."""

    extension = "tri"

    def write(self, triangulation: Triangulation3, name: str | None = None) -> str:
        return write_snappea(triangulation, name or "untitled")
