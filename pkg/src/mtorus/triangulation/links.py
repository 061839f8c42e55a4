"""Vertex links: the surface around each vertex orbit, and its classification."""

import logging
from typing import Literal

from networkx.utils import UnionFind
from pydantic import BaseModel, ConfigDict

from mtorus.core.orientation import permutation_sign, solve_signs
from mtorus.triangulation.errors import TriangulationError
from mtorus.triangulation.models import Triangulation3
from mtorus.triangulation.orbits import Corner, vertex_orbits

logger = logging.getLogger(__name__)

VertexKind = Literal["finite", "ideal"]


def surface_name(euler_characteristic: int, orientable: bool) -> str:
    """Name of the closed connected surface with these invariants."""
    if orientable:
        genus = (2 - euler_characteristic) // 2
        return {0: "sphere", 1: "torus"}.get(genus, f"genus-{genus} surface")
    crosscaps = 2 - euler_characteristic
    return {1: "projective plane", 2: "Klein bottle"}.get(
        crosscaps, f"non-orientable genus-{crosscaps} surface"
    )


class VertexLink(BaseModel):
    """The link of one vertex orbit, built from the corner triangles of its tetrahedra."""

    model_config = ConfigDict(frozen=True)

    orbit: int
    corners: tuple[Corner, ...]
    vertices: int
    edges: int
    triangles: int
    orientable: bool

    @property
    def euler_characteristic(self) -> int:
        return self.vertices - self.edges + self.triangles

    @property
    def surface(self) -> str:
        return surface_name(self.euler_characteristic, self.orientable)

    @property
    def kind(self) -> VertexKind:
        return "finite" if self.surface == "sphere" else "ideal"


class LinkReport(BaseModel):
    """Links of every vertex orbit, in orbit order."""

    model_config = ConfigDict(frozen=True)

    links: tuple[VertexLink, ...]

    @property
    def ideal(self) -> list[VertexLink]:
        return [link for link in self.links if link.kind == "ideal"]

    @property
    def finite(self) -> list[VertexLink]:
        return [link for link in self.links if link.kind == "finite"]

    def summary(self) -> str:
        """For example ``"1 torus cusp, 3 finite vertices"``."""
        counts: dict[str, int] = {}
        for link in self.ideal:
            counts[link.surface] = counts.get(link.surface, 0) + 1
        parts = [
            f"{n} {name} cusp{'s' if n != 1 else ''}" for name, n in sorted(counts.items())
        ]
        finite = len(self.finite)
        if finite:
            parts.append(f"{finite} finite vert{'ices' if finite != 1 else 'ex'}")
        return ", ".join(parts) if parts else "no vertices"


def _others(v: int) -> list[int]:
    return [w for w in range(4) if w != v]


def _link(t: Triangulation3, orbit: int, corners: list[Corner]) -> VertexLink:
    link_vertices = [(tet, v, w) for tet, v in corners for w in _others(v)]
    union = UnionFind(link_vertices)
    constraints: list[tuple[Corner, Corner, int]] = []
    for tet, v in corners:
        for f in _others(v):
            other, perm = t.glue(tet, f)
            pv = perm[v]
            for w in _others(v):
                if w != f:
                    union.union((tet, v, w), (other, pv, perm[w]))
            targets = _others(pv)
            restricted = [targets.index(perm[w]) for w in _others(v)]
            constraints.append(((tet, v), (other, pv), -permutation_sign(restricted)))
    signs = solve_signs(corners, constraints)
    return VertexLink(
        orbit=orbit,
        corners=tuple(corners),
        vertices=len({union[x] for x in link_vertices}),
        edges=3 * len(corners) // 2,
        triangles=len(corners),
        orientable=signs is not None,
    )


def vertex_links(t: Triangulation3) -> LinkReport:
    """Classify every vertex orbit by the Euler characteristic and orientability of its link.

    Spheres are finite vertices; every other link is an ideal vertex. The triangulation must be
    closed, otherwise some link has boundary.
    """
    if not t.is_closed:
        tet, face = t.unglued_faces()[0]
        raise TriangulationError(f"face {face} is unglued, links are not closed", tetrahedron=tet)
    report = LinkReport(
        links=tuple(_link(t, i, corners) for i, corners in enumerate(vertex_orbits(t)))
    )
    logger.debug("vertex links: %s", report.summary())
    return report
