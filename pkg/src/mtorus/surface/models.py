"""Pydantic models for the triangulated torus K and its face pairing."""

from typing import Literal

from pydantic import BaseModel, ConfigDict

CellKind = Literal["rectangle", "pentagon", "fold"]
AnnulusKind = Literal["subdivision", "fold", "final"]


class CircleSpelling(BaseModel):
    """A loop sigma_i spelled along a circle of K.

    Vertex ``j`` of the circle is the start of interval ``j`` and has id ``offset + j``. A
    circle with ``alias`` set is a copy of circle ``alias`` rotated by ``shift``: its interval
    ``j`` is the aliased circle's interval ``j + shift``.
    """

    model_config = ConfigDict(frozen=True)

    index: int
    offset: int
    steps: tuple[str, ...]
    alias: int | None = None
    shift: int = 0

    def __len__(self) -> int:
        return len(self.steps)

    def vertex(self, j: int) -> int:
        return self.offset + j % len(self.steps)

    def edge(self, j: int) -> str:
        """Name of the edge of K under interval ``j``."""
        n = len(self.steps)
        if self.alias is None:
            return f"c{self.index}.{j % n}"
        return f"c{self.alias}.{(j + self.shift) % n}"

    @property
    def intervals(self) -> list[tuple[str, int]]:
        return [(d, j) for j, d in enumerate(self.steps)]


class Triangle(BaseModel):
    """A 2-simplex of K, listed counter-clockwise.

    ``sides[k]`` names the edge opposite ``corners[k]``. ``label`` and ``position`` give the
    lower-circle interval the triangle sits over.
    """

    model_config = ConfigDict(frozen=True)

    corners: tuple[int, int, int]
    sides: tuple[str, str, str]
    annulus: int
    cell: CellKind
    label: str
    position: int

    def side_endpoints(self, f: int) -> tuple[int, int]:
        """Endpoints of side ``f`` in counter-clockwise order."""
        return self.corners[(f + 1) % 3], self.corners[(f + 2) % 3]


class TrianglePair(BaseModel):
    """A pair of the face pairing: corner ``k`` of ``first`` goes to corner ``corners[k]``."""

    model_config = ConfigDict(frozen=True)

    first: int
    second: int
    corners: tuple[int, int, int]


class Annulus(BaseModel):
    """The triangles ``start .. stop - 1`` between circles ``lower`` and ``upper``."""

    model_config = ConfigDict(frozen=True)

    index: int
    kind: AnnulusKind
    lower: int
    upper: int
    start: int
    stop: int

    @property
    def triangle_count(self) -> int:
        return self.stop - self.start


class SurfaceComplex(BaseModel):
    """The torus K: circles, triangles, annuli and the pairing e.

    ``canonical`` sends every vertex id to its vertex of K; only the top copy of the first
    circle is identified with another circle.
    """

    model_config = ConfigDict(frozen=True)

    circles: list[CircleSpelling]
    triangles: list[Triangle]
    annuli: list[Annulus]
    pairs: list[TrianglePair]
    canonical: dict[int, int]

    @property
    def vertices(self) -> list[int]:
        return sorted(set(self.canonical.values()))

    @property
    def edges(self) -> list[str]:
        return sorted({side for t in self.triangles for side in t.sides})

    @property
    def euler_characteristic(self) -> int:
        return len(self.vertices) - len(self.edges) + len(self.triangles)

    def partner(self) -> dict[int, tuple[int, tuple[int, int, int]]]:
        """Triangle -> (paired triangle, corner map), in both directions."""
        out: dict[int, tuple[int, tuple[int, int, int]]] = {}
        for pair in self.pairs:
            inverse = [0, 0, 0]
            for k, image in enumerate(pair.corners):
                inverse[image] = k
            out[pair.first] = (pair.second, pair.corners)
            out[pair.second] = (pair.first, (inverse[0], inverse[1], inverse[2]))
        return out

    def side_matching(self, t: int, f: int, u: int, g: int) -> bool:
        """True when side ``f`` of triangle ``t`` and side ``g`` of ``u`` run the same way.

        Both sides must name the same edge. Endpoints are matched by vertex id, falling back to
        the vertex of K for the edges where the top circle meets the first one.
        """
        x1, _ = self.triangles[t].side_endpoints(f)
        y1, y2 = self.triangles[u].side_endpoints(g)
        if x1 in (y1, y2):
            return x1 == y1
        return self.canonical[x1] == self.canonical[y1]

    def triangles_in(self, annulus: int) -> list[Triangle]:
        a = self.annuli[annulus]
        return self.triangles[a.start : a.stop]


class AnnulusPiece(BaseModel):
    """Triangles of one annulus with pairs indexed locally, before assembly into K."""

    kind: AnnulusKind
    triangles: list[Triangle]
    pairs: list[TrianglePair]
