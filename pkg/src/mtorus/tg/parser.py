"""Reading the T/G text format.

One tetrahedron per ``T v1 v2 v3 v4`` line and one explicit gluing per
``G v1 v2 v3 w1 w2 w3`` line. Blank lines and ``//`` comments are ignored.
"""

from pydantic import BaseModel, ConfigDict

from mtorus.tg.errors import TgParseError

COMMENT = "//"


class TgTetrahedron(BaseModel):
    model_config = ConfigDict(frozen=True)

    labels: tuple[str, str, str, str]
    line: int


class TgGluing(BaseModel):
    """Face ``first`` glued to face ``second`` with ``first[k]`` matched to ``second[k]``."""

    model_config = ConfigDict(frozen=True)

    first: tuple[str, str, str]
    second: tuple[str, str, str]
    line: int


class TgDocument(BaseModel):
    model_config = ConfigDict(frozen=True)

    tetrahedra: tuple[TgTetrahedron, ...] = ()
    gluings: tuple[TgGluing, ...] = ()
    source: str | None = None


def parse_tg(text: str, source: str | None = None) -> TgDocument:
    tetrahedra: list[TgTetrahedron] = []
    gluings: list[TgGluing] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split(COMMENT, 1)[0].split()
        if not tokens:
            continue
        tag, labels = tokens[0], tokens[1:]
        if tag == "T":
            if len(labels) != 4:
                raise TgParseError(f"T needs 4 labels, got {len(labels)}", number, source)
            if len(set(labels)) != 4:
                raise TgParseError(f"duplicate label in T line: {' '.join(labels)}", number, source)
            tetrahedra.append(
                TgTetrahedron(labels=(labels[0], labels[1], labels[2], labels[3]), line=number)
            )
        elif tag == "G":
            if len(labels) != 6:
                raise TgParseError(f"G needs 6 labels, got {len(labels)}", number, source)
            first, second = labels[:3], labels[3:]
            if len(set(first)) != 3 or len(set(second)) != 3:
                raise TgParseError(
                    f"duplicate label in G line: {' '.join(labels)}", number, source
                )
            gluings.append(
                TgGluing(
                    first=(first[0], first[1], first[2]),
                    second=(second[0], second[1], second[2]),
                    line=number,
                )
            )
        else:
            raise TgParseError(f"unknown line tag {tag!r}", number, source)
    return TgDocument(tetrahedra=tuple(tetrahedra), gluings=tuple(gluings), source=source)
