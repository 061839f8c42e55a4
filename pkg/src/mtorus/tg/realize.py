"""Turning a parsed T/G document into a triangulation."""

import logging
from collections import defaultdict

from mtorus.tg.errors import TgRealizeError
from mtorus.tg.parser import TgDocument
from mtorus.triangulation.models import FaceGluing, Triangulation3
from mtorus.triangulation.perm import Perm

logger = logging.getLogger(__name__)

Face = tuple[int, int]


def face_labels(labels: tuple[str, str, str, str], face: int) -> frozenset[str]:
    """Labels on face ``face``, the face opposite vertex ``face``."""
    return frozenset(label for k, label in enumerate(labels) if k != face)


def faces_by_triple(doc: TgDocument) -> dict[frozenset[str], list[Face]]:
    index: dict[frozenset[str], list[Face]] = defaultdict(list)
    for i, tet in enumerate(doc.tetrahedra):
        for f in range(4):
            index[face_labels(tet.labels, f)].append((i, f))
    return dict(index)


def _perm(doc: TgDocument, source: Face, target: Face, matching: dict[str, str]) -> Perm:
    (i, f), (j, g) = source, target
    first, second = doc.tetrahedra[i].labels, doc.tetrahedra[j].labels
    images = [0, 0, 0, 0]
    images[f] = g
    for k, label in enumerate(first):
        if k != f:
            images[k] = second.index(matching[label])
    return (images[0], images[1], images[2], images[3])


def implicit_gluings(doc: TgDocument) -> list[tuple[Face, Face]]:
    """Pairs of faces carrying the same three labels, in document order."""
    for i, a in enumerate(doc.tetrahedra):
        for j in range(i + 1, len(doc.tetrahedra)):
            if set(a.labels) == set(doc.tetrahedra[j].labels):
                raise TgRealizeError(
                    f"tetrahedra share all four labels {sorted(a.labels)}", doc.tetrahedra[j].line
                )
    pairs: list[tuple[Face, Face]] = []
    for triple, faces in faces_by_triple(doc).items():
        if len(faces) > 2:
            lines = sorted(doc.tetrahedra[i].line for i, _ in faces)
            raise TgRealizeError(
                f"labels {sorted(triple)} are shared by {len(faces)} faces (lines {lines})",
                lines[-1],
            )
        if len(faces) == 2:
            pairs.append((faces[0], faces[1]))
    return sorted(pairs)


def _resolve(
    index: dict[frozenset[str], list[Face]], glued: set[Face], triple: tuple[str, ...], line: int
) -> Face:
    candidates = index.get(frozenset(triple), [])
    if not candidates:
        raise TgRealizeError(f"no tetrahedron has the face {' '.join(triple)}", line)
    if any(face in glued for face in candidates):
        raise TgRealizeError(f"face {' '.join(triple)} is glued twice", line)
    # two faces with one triple are glued implicitly, so one candidate is left here
    return candidates[0]


def realize(doc: TgDocument) -> Triangulation3:
    """Glue faces sharing three labels, then apply the G lines; every face must end up glued."""
    index = faces_by_triple(doc)
    glued: set[Face] = set()
    gluings: list[FaceGluing] = []
    for source, target in implicit_gluings(doc):
        labels = face_labels(doc.tetrahedra[source[0]].labels, source[1])
        perm = _perm(doc, source, target, {x: x for x in labels})
        gluings.append(FaceGluing(tet=source[0], face=source[1], other=target[0], perm=perm))
        glued.update((source, target))

    for gluing in doc.gluings:
        if set(gluing.first) == set(gluing.second):
            spelled = " ".join(gluing.first)
            raise TgRealizeError(f"face {spelled} is glued to itself", gluing.line)
        source = _resolve(index, glued, gluing.first, gluing.line)
        glued.add(source)
        target = _resolve(index, glued, gluing.second, gluing.line)
        glued.add(target)
        matching = dict(zip(gluing.first, gluing.second, strict=True))
        perm = _perm(doc, source, target, matching)
        gluings.append(FaceGluing(tet=source[0], face=source[1], other=target[0], perm=perm))

    unglued = [
        (i, f) for i in range(len(doc.tetrahedra)) for f in range(4) if (i, f) not in glued
    ]
    if unglued:
        i, f = unglued[0]
        first = " ".join(sorted(face_labels(doc.tetrahedra[i].labels, f)))
        raise TgRealizeError(
            f"{len(unglued)} unglued faces, first {first}", doc.tetrahedra[i].line
        )
    provenance = {"format": "tg"}
    if doc.source:
        provenance["source"] = doc.source
    try:
        triangulation = Triangulation3.from_gluings(len(doc.tetrahedra), gluings, provenance)
    except ValueError as exc:
        raise TgRealizeError(str(exc)) from exc
    logger.debug(
        "realized %d tetrahedra, %d implicit and %d explicit gluings",
        triangulation.size,
        len(gluings) - len(doc.gluings),
        len(doc.gluings),
    )
    return triangulation
