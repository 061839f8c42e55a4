"""Coning the torus complex K and gluing the cones by the face pairing."""

import logging

from mtorus.surface.checks import edge_incidence
from mtorus.surface.models import SurfaceComplex
from mtorus.triangulation.errors import TriangulationError
from mtorus.triangulation.models import FaceGluing, Triangulation3
from mtorus.triangulation.perm import Perm

logger = logging.getLogger(__name__)

APEX = 3


def _lateral_perm(f: int, g: int, same: bool) -> Perm:
    images = [0, 0, 0, APEX]
    images[f] = g
    if same:
        images[(f + 1) % 3] = (g + 1) % 3
        images[(f + 2) % 3] = (g + 2) % 3
    else:
        images[(f + 1) % 3] = (g + 2) % 3
        images[(f + 2) % 3] = (g + 1) % 3
    return (images[0], images[1], images[2], images[3])


def cone_and_glue(k: SurfaceComplex) -> Triangulation3:
    """One tetrahedron per triangle of K, with vertex 3 of every tetrahedron at the cone point.

    Vertices 0, 1, 2 of tetrahedron ``i`` are the corners of triangle ``i``. The base face (3)
    is glued by the pairing; lateral face ``f`` is the cone over side ``f`` and is glued to the
    cone over the other triangle side carrying the same edge of K.
    """
    gluings: list[FaceGluing] = []
    for edge, slots in sorted(edge_incidence(k).items()):
        if len(slots) != 2:
            raise TriangulationError(f"edge {edge} of K lies in {len(slots)} triangles")
        (t, f), (u, g) = slots
        same = k.side_matching(t, f, u, g)
        gluings.append(FaceGluing(tet=t, face=f, other=u, perm=_lateral_perm(f, g, same)))

    for pair in k.pairs:
        c = pair.corners
        gluings.append(
            FaceGluing(tet=pair.first, face=APEX, other=pair.second, perm=(c[0], c[1], c[2], APEX))
        )

    try:
        triangulation = Triangulation3.from_gluings(
            len(k.triangles),
            gluings,
            provenance={"construction": "cone", "triangles": str(len(k.triangles))},
        )
    except ValueError as exc:
        raise TriangulationError(str(exc)) from exc
    if not triangulation.is_closed:
        t, f = triangulation.unglued_faces()[0]
        raise TriangulationError(f"face {f} is unglued", tetrahedron=t)
    logger.debug("coned K into %d tetrahedra", triangulation.size)
    return triangulation
