"""The contents of a SnapPea ``% Triangulation`` file."""

from typing import Literal

from pydantic import BaseModel, ConfigDict

from mtorus.snappea.errors import SnapPeaError
from mtorus.triangulation.models import Tetrahedron, Triangulation3
from mtorus.triangulation.perm import Perm, encode

MAGIC = "% Triangulation"
PERIPHERAL_ROWS = 4

CuspType = Literal["torus", "Klein"]
Orientability = Literal["oriented_manifold", "nonorientable_manifold", "unknown_orientability"]


class SnapPeaTetrahedron(BaseModel):
    """One tetrahedron block; peripheral curves are always zero and shapes unset."""

    model_config = ConfigDict(frozen=True)

    neighbors: tuple[int, int, int, int]
    perms: tuple[Perm, Perm, Perm, Perm]
    cusps: tuple[int, int, int, int]


class SnapPeaFile(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str
    solution_type: str = "not_attempted 0.0"
    orientability: Orientability
    chern_simons: str = "CS_unknown"
    cusps: tuple[CuspType, ...]
    tetrahedra: tuple[SnapPeaTetrahedron, ...]

    def render(self) -> str:
        orientable = sum(1 for c in self.cusps if c == "torus")
        lines = [
            MAGIC,
            self.name,
            self.solution_type,
            self.orientability,
            self.chern_simons,
            "",
            f"{orientable} {len(self.cusps) - orientable}",
        ]
        lines += [f"{cusp} 0.0 0.0" for cusp in self.cusps]
        lines += ["", str(len(self.tetrahedra))]
        zeros = " ".join(["0"] * 16)
        for tet in self.tetrahedra:
            lines += [
                " ".join(str(n) for n in tet.neighbors),
                " ".join(encode(p) for p in tet.perms),
                " ".join(str(c) for c in tet.cusps),
                *([zeros] * PERIPHERAL_ROWS),
                "0.0 0.0",
                "",
            ]
        return "\n".join(lines)

    def to_triangulation(self) -> Triangulation3:
        """The gluing structure, with the file name kept as provenance."""
        try:
            return Triangulation3(
                tetrahedra=[
                    Tetrahedron(neighbors=tet.neighbors, gluings=tet.perms)
                    for tet in self.tetrahedra
                ],
                provenance={"format": "snappea", "name": self.name},
            )
        except ValueError as exc:
            raise SnapPeaError(f"inconsistent gluing blocks: {exc}") from exc
