"""Finite group presentations and their abelianization."""

from collections.abc import Sequence
from typing import Self

from pydantic import BaseModel, ConfigDict, model_validator

from mtorus.core.edges import cyclic_reduce, edge_label, format_steps, is_forward, is_valid_label
from mtorus.groups.smith import AbelianGroup, IntegerMatrix, cokernel
from mtorus.groups.words import Word


class Presentation(BaseModel):
    """Generators and relators; a relator is a word over the generators and their inverses."""

    model_config = ConfigDict(frozen=True)

    generators: tuple[str, ...]
    relators: tuple[Word, ...] = ()

    @model_validator(mode="after")
    def _check_letters(self) -> Self:
        if len(set(self.generators)) != len(self.generators):
            msg = "generators must be distinct"
            raise ValueError(msg)
        for x in self.generators:
            if not is_valid_label(x):
                msg = f"invalid generator name {x!r}"
                raise ValueError(msg)
        known = set(self.generators)
        for i, relator in enumerate(self.relators):
            unknown = {edge_label(x) for x in relator} - known
            if unknown:
                msg = f"relator {i} uses undeclared generators {sorted(unknown)}"
                raise ValueError(msg)
        return self

    @classmethod
    def from_strings(cls, generators: str, relators: Sequence[str] = ()) -> "Presentation":
        """Build from ``"a b t"`` and relators such as ``"~t a t ~a ~b"``."""
        return cls(
            generators=tuple(generators.split()),
            relators=tuple(tuple(r.split()) for r in relators),
        )

    @property
    def total_length(self) -> int:
        return sum(len(r) for r in self.relators)

    @property
    def size(self) -> tuple[int, int]:
        """Number of generators, then total relator length; Tietze moves never increase it."""
        return len(self.generators), self.total_length

    def normalized(self) -> "Presentation":
        """Cyclically reduce every relator and drop empty or repeated ones."""
        relators: list[Word] = []
        for relator in self.relators:
            reduced = cyclic_reduce(relator)
            if reduced and reduced not in relators:
                relators.append(reduced)
        return Presentation(generators=self.generators, relators=tuple(relators))

    def __str__(self) -> str:
        relators = ", ".join(format_steps(r) for r in self.relators)
        return f"<{', '.join(self.generators)} | {relators}>"


def exponent_matrix(p: Presentation) -> IntegerMatrix:
    """Rows are generators, columns are relators, entries are exponent sums."""
    index = {x: i for i, x in enumerate(p.generators)}
    matrix = IntegerMatrix(rows=len(p.generators), cols=len(p.relators))
    for j, relator in enumerate(p.relators):
        for x in relator:
            matrix.add(index[edge_label(x)], j, 1 if is_forward(x) else -1)
    return matrix


def abelianization(p: Presentation) -> AbelianGroup:
    return cokernel(exponent_matrix(p))
