"""Pydantic models for tetrahedra and their face gluings."""

from collections.abc import Iterable, Iterator
from typing import Self

from pydantic import BaseModel, ConfigDict, model_validator

from mtorus.triangulation.perm import Perm, inverse, is_perm


class FaceGluing(BaseModel):
    """Face ``face`` of ``tet`` glued to face ``perm[face]`` of ``other``.

    ``perm`` sends the vertices of ``tet`` to those of ``other``; only its restriction to the
    three vertices of the glued face matters geometrically.
    """

    model_config = ConfigDict(frozen=True)

    tet: int
    face: int
    other: int
    perm: Perm

    @property
    def other_face(self) -> int:
        return self.perm[self.face]

    def reverse(self) -> "FaceGluing":
        return FaceGluing(
            tet=self.other, face=self.other_face, other=self.tet, perm=inverse(self.perm)
        )


class Tetrahedron(BaseModel):
    """One tetrahedron: the neighbor and vertex permutation across each of its four faces.

    Face ``f`` is the face opposite vertex ``f``. ``None`` marks an unglued face.
    """

    model_config = ConfigDict(frozen=True)

    neighbors: tuple[int | None, int | None, int | None, int | None] = (None, None, None, None)
    gluings: tuple[Perm | None, Perm | None, Perm | None, Perm | None] = (None, None, None, None)

    @model_validator(mode="after")
    def _check_faces(self) -> Self:
        for f in range(4):
            if (self.neighbors[f] is None) != (self.gluings[f] is None):
                msg = f"face {f} has a neighbor without a permutation or the reverse"
                raise ValueError(msg)
            perm = self.gluings[f]
            if perm is not None and not is_perm(perm):
                msg = f"face {f} carries {perm}, which is not a permutation of 0..3"
                raise ValueError(msg)
        return self

    @property
    def glued_faces(self) -> list[int]:
        return [f for f in range(4) if self.neighbors[f] is not None]


class Triangulation3(BaseModel):
    """Tetrahedra glued in pairs along faces.

    Gluings are stored on both sides and must be mutually inverse. ``provenance`` records where
    the triangulation came from (input file, pipeline stage counts) and never affects structure.
    """

    model_config = ConfigDict(frozen=True)

    tetrahedra: list[Tetrahedron]
    provenance: dict[str, str] = {}

    @model_validator(mode="after")
    def _check_symmetry(self) -> Self:
        n = len(self.tetrahedra)
        for t, tet in enumerate(self.tetrahedra):
            for f in tet.glued_faces:
                u, perm = tet.neighbors[f], tet.gluings[f]
                assert u is not None and perm is not None
                if not 0 <= u < n:
                    msg = f"tetrahedron {t} face {f} names missing tetrahedron {u}"
                    raise ValueError(msg)
                g = perm[f]
                back = self.tetrahedra[u]
                if back.neighbors[g] != t or back.gluings[g] != inverse(perm):
                    msg = f"gluing of tetrahedron {t} face {f} is not matched by {u} face {g}"
                    raise ValueError(msg)
                if u == t and g == f:
                    msg = f"tetrahedron {t} face {f} is glued to itself"
                    raise ValueError(msg)
        return self

    @classmethod
    def from_gluings(
        cls, count: int, gluings: Iterable[FaceGluing], provenance: dict[str, str] | None = None
    ) -> "Triangulation3":
        """Assemble ``count`` tetrahedra from one-sided gluings; each face may be named once."""
        neighbors: list[list[int | None]] = [[None] * 4 for _ in range(count)]
        perms: list[list[Perm | None]] = [[None] * 4 for _ in range(count)]
        for gluing in gluings:
            for side in (gluing, gluing.reverse()):
                if neighbors[side.tet][side.face] is not None:
                    msg = f"tetrahedron {side.tet} face {side.face} is glued twice"
                    raise ValueError(msg)
                neighbors[side.tet][side.face] = side.other
                perms[side.tet][side.face] = side.perm
        tetrahedra = [
            Tetrahedron(
                neighbors=(n[0], n[1], n[2], n[3]), gluings=(p[0], p[1], p[2], p[3])
            )
            for n, p in zip(neighbors, perms, strict=True)
        ]
        return cls(tetrahedra=tetrahedra, provenance=provenance or {})

    @property
    def size(self) -> int:
        return len(self.tetrahedra)

    @property
    def is_closed(self) -> bool:
        return all(len(tet.glued_faces) == 4 for tet in self.tetrahedra)

    def unglued_faces(self) -> list[tuple[int, int]]:
        return [
            (t, f)
            for t, tet in enumerate(self.tetrahedra)
            for f in range(4)
            if tet.neighbors[f] is None
        ]

    def face_gluings(self) -> Iterator[FaceGluing]:
        """Each gluing once, from the side with the smaller (tetrahedron, face)."""
        for t, tet in enumerate(self.tetrahedra):
            for f in tet.glued_faces:
                u, perm = tet.neighbors[f], tet.gluings[f]
                assert u is not None and perm is not None
                if (t, f) <= (u, perm[f]):
                    yield FaceGluing(tet=t, face=f, other=u, perm=perm)

    def glue(self, t: int, f: int) -> tuple[int, Perm]:
        """Neighbor and permutation across face ``f`` of ``t``; the face must be glued."""
        tet = self.tetrahedra[t]
        u, perm = tet.neighbors[f], tet.gluings[f]
        if u is None or perm is None:
            msg = f"tetrahedron {t} face {f} is unglued"
            raise KeyError(msg)
        return u, perm
