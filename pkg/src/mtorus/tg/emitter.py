"""Writing a triangulation as a T/G document."""

from typing import Literal

from mtorus.tg.errors import TgEmitError
from mtorus.tg.realize import face_labels
from mtorus.triangulation.models import Triangulation3
from mtorus.triangulation.orbits import vertex_orbits

LabelMode = Literal["auto", "corners"]


def _orbit_labels(t: Triangulation3) -> list[tuple[str, str, str, str]] | None:
    """Vertex-orbit labels, if implicit gluing then reproduces exactly the gluings of ``t``."""
    names: dict[tuple[int, int], str] = {}
    for k, orbit in enumerate(vertex_orbits(t)):
        for corner in orbit:
            names[corner] = f"v{k}"
    labels = [(names[(i, 0)], names[(i, 1)], names[(i, 2)], names[(i, 3)]) for i in range(t.size)]
    if any(len(set(row)) != 4 for row in labels):
        return None
    if len({frozenset(row) for row in labels}) != len(labels):
        return None
    faces: dict[frozenset[str], list[tuple[int, int]]] = {}
    for i, row in enumerate(labels):
        for f in range(4):
            faces.setdefault(face_labels(row, f), []).append((i, f))
    for group in faces.values():
        if len(group) != 2:
            return None
        (i, f), (j, g) = group
        if t.tetrahedra[i].neighbors[f] != j or t.tetrahedra[i].gluings[f] is None:
            return None
        perm = t.tetrahedra[i].gluings[f]
        assert perm is not None
        if perm[f] != g or any(labels[j][perm[k]] != labels[i][k] for k in range(4) if k != f):
            return None
    return labels


def emit_tg(t: Triangulation3, labels: LabelMode = "auto", name: str | None = None) -> str:
    """A T/G document that realizes to a triangulation isomorphic to ``t``.

    With ``"auto"``, vertex-orbit labels are used when every gluing is then implicit; otherwise
    every corner gets its own label ``t{i}_{v}`` and every gluing gets a G line.
    """
    if not t.is_closed:
        tet, face = t.unglued_faces()[0]
        raise TgEmitError(f"tetrahedron {tet} face {face} is unglued")
    lines = [f"// {name}"] if name else []
    orbit_labels = _orbit_labels(t) if labels == "auto" else None
    if orbit_labels is not None:
        lines += ["T " + " ".join(row) for row in orbit_labels]
        return "\n".join(lines) + "\n"

    corners = [tuple(f"t{i}_{v}" for v in range(4)) for i in range(t.size)]
    lines += ["T " + " ".join(row) for row in corners]
    for gluing in t.face_gluings():
        sides = [k for k in range(4) if k != gluing.face]
        first = [corners[gluing.tet][k] for k in sides]
        second = [corners[gluing.other][gluing.perm[k]] for k in sides]
        lines.append("G " + " ".join(first + second))
    return "\n".join(lines) + "\n"


class TgWriter:
    """TriangulationWriter for the T/G format."""

    extension = "tg"

    def __init__(self, labels: LabelMode = "auto") -> None:
        self._labels: LabelMode = labels

    def write(self, triangulation: Triangulation3, name: str | None = None) -> str:
        return emit_tg(triangulation, self._labels, name)
