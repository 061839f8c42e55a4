"""Pydantic models for stages, subdivision and fold steps, and whole fold sequences."""

from typing import Literal

from pydantic import BaseModel, ConfigDict

from mtorus.core.edges import cyclic_reduce, free_reduce
from mtorus.core.models import CyclicPath, Graph, GraphMap, MarkedMap
from mtorus.graphs.analysis import FoldCandidate
from mtorus.graphs.paths import map_size, substitute


class Stage(BaseModel):
    """The graph G_i with its loop sigma_i and the map g_i from G_i down to the input graph."""

    model_config = ConfigDict(frozen=True)

    index: int
    sigma: CyclicPath
    map: GraphMap

    @property
    def graph(self) -> Graph:
        return self.map.domain

    @property
    def size(self) -> int:
        return map_size(self.map)


class SubdivisionStep(BaseModel):
    """Subdivision s_i preparing a fold.

    ``subdivided`` maps each old edge label to its two replacement labels, and ``prepared``
    is the candidate restated on the subdivided graph: its two directions have equal images.
    """

    model_config = ConfigDict(frozen=True)

    s: GraphMap
    subdivided: dict[str, tuple[str, str]]
    candidate: FoldCandidate
    prepared: FoldCandidate

    @property
    def is_identity(self) -> bool:
        return not self.subdivided


class FoldStep(BaseModel):
    """Fold p_i identifying the direction ``identified[0]`` with ``identified[1]``.

    When the two directions were the only ones at their common vertex, ``collapsed`` is set:
    both corners there cancel, the arc they form is contracted to a point and neither edge
    survives in G_{2i+2}.
    """

    model_config = ConfigDict(frozen=True)

    p: GraphMap
    identified: tuple[str, str]
    kind: Literal["partial", "full"]
    size_before: int
    size_after: int
    collapsed: bool = False


class FoldSequence(BaseModel):
    """A marked map factored as g_n p_{n-1} s_{n-1} ... p_0 s_0.

    ``stages`` holds G_0 .. G_2n; ``steps`` alternates subdivision and fold steps, so
    ``steps[2 * i]`` is s_i and ``steps[2 * i + 1]`` is p_i.
    """

    model_config = ConfigDict(frozen=True)

    original: MarkedMap
    stages: list[Stage]
    steps: list[SubdivisionStep | FoldStep]
    terminal: GraphMap

    @property
    def n(self) -> int:
        return len(self.folds)

    @property
    def subdivisions(self) -> list[SubdivisionStep]:
        return [s for s in self.steps if isinstance(s, SubdivisionStep)]

    @property
    def folds(self) -> list[FoldStep]:
        return [s for s in self.steps if isinstance(s, FoldStep)]

    @property
    def sizes(self) -> list[int]:
        """Map size at G_0 and after every fold."""
        return [self.stages[0].size] + [f.size_after for f in self.folds]

    @property
    def partial_folds(self) -> int:
        return sum(1 for f in self.folds if f.kind == "partial")

    @property
    def full_folds(self) -> int:
        return sum(1 for f in self.folds if f.kind == "full")

    def _push(self, steps: tuple[str, ...]) -> tuple[str, ...]:
        for step in self.steps:
            steps = substitute(step.s if isinstance(step, SubdivisionStep) else step.p, steps)
        return substitute(self.terminal, steps)

    def compose_edge(self, label: str) -> tuple[str, ...]:
        """Push an edge of G_0 through every step and the terminal map, then tighten.

        This equals the original image of ``label`` unless a collapsed fold moved one of its
        endpoints; closed loops are unaffected, see ``compose_cycle``.
        """
        return free_reduce(self._push((label,)))

    def compose_cycle(self, loop: CyclicPath) -> CyclicPath:
        """Push a closed path of G_0 through the factorization and reduce it cyclically."""
        return CyclicPath(steps=cyclic_reduce(self._push(loop.steps)))
