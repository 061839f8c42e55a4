"""Canonical relabeling of a connected triangulation, for isomorphism tests."""

from collections.abc import Iterator

from mtorus.triangulation.errors import TriangulationError
from mtorus.triangulation.models import Triangulation3
from mtorus.triangulation.perm import ALL_PERMS, Perm, compose, inverse

Token = tuple[int, int]

_PERM_INDEX = {p: i for i, p in enumerate(ALL_PERMS)}


def _relabeled_tokens(t: Triangulation3, start: int, labels: Perm) -> Iterator[Token]:
    """Gluing data in breadth-first order from ``start`` with its vertices renamed by ``labels``.

    Each newly reached tetrahedron is labeled so its gluing to the tetrahedron it was reached
    from reads as the identity.
    """
    order = [start]
    new_index = {start: 0}
    renaming = {start: labels}
    position = 0
    while position < len(order):
        old = order[position]
        rename = renaming[old]
        back = inverse(rename)
        for face in range(4):
            f = back[face]
            neighbor, p = t.tetrahedra[old].neighbors[f], t.tetrahedra[old].gluings[f]
            if neighbor is None or p is None:
                yield (-1, -1)
                continue
            if neighbor not in new_index:
                new_index[neighbor] = len(order)
                order.append(neighbor)
                renaming[neighbor] = compose(rename, inverse(p))
            glued = compose(renaming[neighbor], compose(p, back))
            yield (new_index[neighbor], _PERM_INDEX[glued])
        position += 1
    if len(order) != t.size:
        raise TriangulationError("canonical form needs a connected triangulation")


def canonical_form(t: Triangulation3) -> tuple[Token, ...]:
    """The lexicographically least relabeled gluing table over all starts and vertex orders."""
    best: list[Token] | None = None
    for start in range(t.size):
        for labels in ALL_PERMS:
            candidate: list[Token] = []
            smaller = best is None
            for token in _relabeled_tokens(t, start, labels):
                if not smaller:
                    assert best is not None
                    reference = best[len(candidate)]
                    if token > reference:
                        break
                    if token < reference:
                        smaller = True
                candidate.append(token)
            else:
                if smaller:
                    best = candidate
    return tuple(best or ())


def is_isomorphic(first: Triangulation3, second: Triangulation3) -> bool:
    """Combinatorial isomorphism of connected triangulations."""
    if first.size != second.size:
        return False
    return canonical_form(first) == canonical_form(second)
