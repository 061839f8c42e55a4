"""Reading back the SnapPea files this package writes."""

from collections.abc import Iterator
from typing import cast

from mtorus.snappea.errors import SnapPeaParseError
from mtorus.snappea.models import (
    MAGIC,
    PERIPHERAL_ROWS,
    CuspType,
    Orientability,
    SnapPeaFile,
    SnapPeaTetrahedron,
)
from mtorus.triangulation.perm import Perm, decode

ORIENTABILITY = ("oriented_manifold", "nonorientable_manifold", "unknown_orientability")
HEADER_LINES = 5


class _Tokens:
    """Whitespace-separated tokens with the line each came from."""

    def __init__(self, lines: list[str], first_line: int) -> None:
        self._items: Iterator[tuple[str, int]] = (
            (token, number)
            for number, line in enumerate(lines, start=first_line)
            for token in line.split()
        )
        self.line = first_line

    def next(self, what: str) -> str:
        try:
            token, self.line = next(self._items)
        except StopIteration:
            raise SnapPeaParseError(f"file ends before {what}", self.line) from None
        return token

    def integer(self, what: str) -> int:
        token = self.next(what)
        try:
            return int(token)
        except ValueError:
            msg = f"expected an integer for {what}, got {token!r}"
            raise SnapPeaParseError(msg, self.line) from None

    def real(self, what: str) -> float:
        token = self.next(what)
        try:
            return float(token)
        except ValueError:
            msg = f"expected a number for {what}, got {token!r}"
            raise SnapPeaParseError(msg, self.line) from None

    def perm(self, what: str) -> Perm:
        token = self.next(what)
        try:
            return decode(token)
        except ValueError as exc:
            raise SnapPeaParseError(str(exc), self.line) from exc

    def exhausted(self) -> bool:
        return next(self._items, None) is None


def _four(values: list[int]) -> tuple[int, int, int, int]:
    return values[0], values[1], values[2], values[3]


def read_snappea(text: str) -> SnapPeaFile:
    lines = text.splitlines()
    if len(lines) < HEADER_LINES or lines[0].strip() != MAGIC:
        raise SnapPeaParseError(f"missing {MAGIC!r} header", 1)
    name, solution, orientability, chern_simons = (line.strip() for line in lines[1:5])
    if orientability not in ORIENTABILITY:
        raise SnapPeaParseError(f"unknown orientability {orientability!r}", 4)

    tokens = _Tokens(lines[HEADER_LINES:], HEADER_LINES + 1)
    orientable = tokens.integer("the cusp counts")
    nonorientable = tokens.integer("the cusp counts")
    cusps: list[CuspType] = []
    for k in range(orientable + nonorientable):
        kind = tokens.next("a cusp type")
        expected = "torus" if k < orientable else "Klein"
        if kind != expected:
            raise SnapPeaParseError(f"cusp {k} should be {expected}, got {kind!r}", tokens.line)
        tokens.real("the cusp filling")
        tokens.real("the cusp filling")
        cusps.append(cast(CuspType, kind))

    count = tokens.integer("the tetrahedron count")
    tetrahedra: list[SnapPeaTetrahedron] = []
    for i in range(count):
        neighbors = [tokens.integer(f"neighbors of tetrahedron {i}") for _ in range(4)]
        perms = [tokens.perm(f"gluings of tetrahedron {i}") for _ in range(4)]
        corner_cusps = [tokens.integer(f"cusps of tetrahedron {i}") for _ in range(4)]
        for _ in range(16 * PERIPHERAL_ROWS):
            tokens.integer(f"peripheral curves of tetrahedron {i}")
        tokens.real(f"the shape of tetrahedron {i}")
        tokens.real(f"the shape of tetrahedron {i}")
        for n in neighbors:
            if not 0 <= n < count:
                raise SnapPeaParseError(f"neighbor {n} out of range", tokens.line)
        for c in corner_cusps:
            if not -1 <= c < len(cusps):
                raise SnapPeaParseError(f"cusp index {c} out of range", tokens.line)
        tetrahedra.append(
            SnapPeaTetrahedron(
                neighbors=_four(neighbors),
                perms=(perms[0], perms[1], perms[2], perms[3]),
                cusps=_four(corner_cusps),
            )
        )
    if not tokens.exhausted():
        raise SnapPeaParseError("unexpected data after the last tetrahedron", tokens.line)
    return SnapPeaFile(
        name=name,
        solution_type=solution,
        orientability=cast(Orientability, orientability),
        chern_simons=chern_simons,
        cusps=tuple(cusps),
        tetrahedra=tuple(tetrahedra),
    )
