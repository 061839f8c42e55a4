"""Vertex and edge orbits of a triangulation under its face gluings."""

from itertools import combinations

from networkx.utils import UnionFind
from pydantic import BaseModel, ConfigDict

from mtorus.triangulation.errors import TriangulationError
from mtorus.triangulation.models import Triangulation3

Corner = tuple[int, int]
TetEdge = tuple[int, tuple[int, int]]

TET_EDGES: tuple[tuple[int, int], ...] = tuple(combinations(range(4), 2))


class EdgeOrbit(BaseModel):
    """The tetrahedron edges identified into one edge of the triangulation."""

    model_config = ConfigDict(frozen=True)

    members: tuple[TetEdge, ...]

    @property
    def valence(self) -> int:
        return len(self.members)


class EdgeCycle(BaseModel):
    """The walk around one edge: oriented edge in each tetrahedron and the face it leaves by."""

    model_config = ConfigDict(frozen=True)

    edges: tuple[tuple[int, int, int], ...]
    exits: tuple[Corner, ...]

    @property
    def valence(self) -> int:
        return len(self.exits)


def _sorted_groups[T: (Corner, TetEdge)](items: list[T], union: UnionFind) -> list[list[T]]:
    groups: dict[object, list[T]] = {}
    for item in items:
        groups.setdefault(union[item], []).append(item)
    return sorted((sorted(group) for group in groups.values()), key=lambda g: g[0])


def vertex_orbits(t: Triangulation3) -> list[list[Corner]]:
    """Classes of (tetrahedron, vertex) corners, each sorted, ordered by first corner."""
    corners = [(i, v) for i in range(t.size) for v in range(4)]
    union = UnionFind(corners)
    for gluing in t.face_gluings():
        for v in range(4):
            if v != gluing.face:
                union.union((gluing.tet, v), (gluing.other, gluing.perm[v]))
    return _sorted_groups(corners, union)


def edge_orbits(t: Triangulation3) -> list[EdgeOrbit]:
    members: list[TetEdge] = [(i, e) for i in range(t.size) for e in TET_EDGES]
    union = UnionFind(members)
    for gluing in t.face_gluings():
        for a, b in TET_EDGES:
            if gluing.face in (a, b):
                continue
            pa, pb = gluing.perm[a], gluing.perm[b]
            union.union((gluing.tet, (a, b)), (gluing.other, (min(pa, pb), max(pa, pb))))
    return [EdgeOrbit(members=tuple(group)) for group in _sorted_groups(members, union)]


def _walk(t: Triangulation3, start: tuple[int, int, int, int]) -> EdgeCycle:
    tet, a, b, exit_face = start
    edges: list[tuple[int, int, int]] = []
    exits: list[Corner] = []
    seen: dict[tuple[int, tuple[int, int]], tuple[int, int]] = {}
    state = start
    while True:
        tet, a, b, exit_face = state
        key = (tet, (min(a, b), max(a, b)))
        if key in seen:
            if seen[key] != (a, b):
                raise TriangulationError(
                    f"edge {key[1]} is identified with itself in reverse", tetrahedron=tet
                )
            raise TriangulationError(
                f"edge {key[1]} is met twice around its cycle", tetrahedron=tet
            )
        seen[key] = (a, b)
        edges.append((tet, a, b))
        exits.append((tet, exit_face))
        other, perm = t.glue(tet, exit_face)
        na, nb, entry = perm[a], perm[b], perm[exit_face]
        (next_exit,) = {0, 1, 2, 3} - {na, nb, entry}
        state = (other, na, nb, next_exit)
        if state == start:
            return EdgeCycle(edges=tuple(edges), exits=tuple(exits))


def edge_cycles(t: Triangulation3) -> list[EdgeCycle]:
    """Walk every edge orbit; raise TriangulationError on a self-identified edge.

    The triangulation must be closed.
    """
    if not t.is_closed:
        tet, face = t.unglued_faces()[0]
        raise TriangulationError(f"face {face} is unglued", tetrahedron=tet)
    cycles: list[EdgeCycle] = []
    for orbit in edge_orbits(t):
        tet, (a, b) = orbit.members[0]
        exit_face = min({0, 1, 2, 3} - {a, b})
        cycle = _walk(t, (tet, a, b, exit_face))
        if cycle.valence != orbit.valence:
            raise TriangulationError(
                f"edge {(a, b)} closes up after {cycle.valence} of {orbit.valence} tetrahedra",
                tetrahedron=tet,
            )
        cycles.append(cycle)
    return cycles
