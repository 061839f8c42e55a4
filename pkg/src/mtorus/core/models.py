"""Pydantic models for graphs, edge paths, graph maps and marked maps."""

from typing import Self

import networkx as nx
from pydantic import BaseModel, ConfigDict, model_validator

from mtorus.core.edges import (
    edge_label,
    format_steps,
    invert,
    is_forward,
    is_valid_label,
    parse_steps,
    reverse_edge,
)


class Graph(BaseModel):
    """A finite graph whose unoriented edges each carry a unique label.

    ``edges`` maps a label to the (initial, terminal) vertices of its chosen direction; the
    reverse direction ``~label`` runs the other way. Insertion order of ``edges`` is the
    canonical edge order used for deterministic output.
    """

    model_config = ConfigDict(frozen=True)

    vertices: tuple[int, ...]
    edges: dict[str, tuple[int, int]]

    @model_validator(mode="after")
    def _check_structure(self) -> Self:
        if len(set(self.vertices)) != len(self.vertices):
            msg = "vertex ids must be unique"
            raise ValueError(msg)
        known = set(self.vertices)
        for label, (initial, terminal) in self.edges.items():
            if not is_valid_label(label):
                msg = f"invalid edge label {label!r}"
                raise ValueError(msg)
            if initial not in known or terminal not in known:
                msg = f"edge {label} has an endpoint outside the vertex set"
                raise ValueError(msg)
        return self

    @property
    def labels(self) -> list[str]:
        return list(self.edges)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    def has_direction(self, d: str) -> bool:
        return edge_label(d) in self.edges

    def initial(self, d: str) -> int:
        initial, terminal = self.edges[edge_label(d)]
        return initial if is_forward(d) else terminal

    def terminal(self, d: str) -> int:
        initial, terminal = self.edges[edge_label(d)]
        return terminal if is_forward(d) else initial

    def directions(self) -> list[str]:
        """All directed edges, each label followed by its reverse."""
        result: list[str] = []
        for label in self.edges:
            result.extend((label, reverse_edge(label)))
        return result

    def outgoing(self, v: int) -> list[str]:
        """Directed edges emanating from ``v`` (a loop contributes both directions)."""
        return [d for d in self.directions() if self.initial(d) == v]

    def valence(self, v: int) -> int:
        return len(self.outgoing(v))

    def to_networkx(self) -> nx.MultiGraph:
        """Undirected multigraph view, keyed by edge label."""
        g = nx.MultiGraph()
        g.add_nodes_from(self.vertices)
        for label, (initial, terminal) in self.edges.items():
            g.add_edge(initial, terminal, key=label)
        return g

    def is_connected(self) -> bool:
        if not self.vertices:
            return False
        return bool(nx.is_connected(self.to_networkx()))


class EdgePath(BaseModel):
    """A finite sequence of directed edges."""

    model_config = ConfigDict(frozen=True)

    steps: tuple[str, ...] = ()

    @classmethod
    def parse(cls, text: str) -> "EdgePath":
        return cls(steps=parse_steps(text))

    def inverse(self) -> "EdgePath":
        return EdgePath(steps=invert(self.steps))

    def __len__(self) -> int:
        return len(self.steps)

    def __str__(self) -> str:
        return format_steps(self.steps)


class CyclicPath(BaseModel):
    """A cyclically ordered sequence of directed edges, read from ``steps[0]``."""

    model_config = ConfigDict(frozen=True)

    steps: tuple[str, ...] = ()

    @classmethod
    def parse(cls, text: str) -> "CyclicPath":
        return cls(steps=parse_steps(text))

    def inverse(self) -> "CyclicPath":
        return CyclicPath(steps=invert(self.steps))

    def rotations(self) -> list[tuple[str, ...]]:
        n = len(self.steps)
        return [self.steps[k:] + self.steps[:k] for k in range(n)] or [()]

    def rotation_offset(self, other: "CyclicPath") -> int | None:
        """Return ``r`` with ``other.steps[k] == self.steps[(k + r) % n]``, if any."""
        if len(self.steps) != len(other.steps):
            return None
        for r, rotated in enumerate(self.rotations()):
            if rotated == other.steps:
                return r
        return None

    def __len__(self) -> int:
        return len(self.steps)

    def __str__(self) -> str:
        return format_steps(self.steps)


class GraphMap(BaseModel):
    """A map of graphs sending vertices to vertices and each edge to an edge path.

    ``edge_map`` holds the image of the chosen direction of each domain edge; the reverse
    direction maps to the inverse path.
    """

    model_config = ConfigDict(frozen=True)

    domain: Graph
    range: Graph
    vertex_map: dict[int, int]
    edge_map: dict[str, EdgePath]

    @model_validator(mode="after")
    def _check_totality(self) -> Self:
        if set(self.edge_map) != set(self.domain.edges):
            msg = "edge_map must assign an image to every domain edge"
            raise ValueError(msg)
        if set(self.vertex_map) != set(self.domain.vertices):
            msg = "vertex_map must assign an image to every domain vertex"
            raise ValueError(msg)
        targets = set(self.range.vertices)
        if any(w not in targets for w in self.vertex_map.values()):
            msg = "vertex_map sends a vertex outside the range graph"
            raise ValueError(msg)
        for label, path in self.edge_map.items():
            for d in path.steps:
                if not self.range.has_direction(d):
                    msg = f"image of {label} uses {d}, which is not an edge of the range"
                    raise ValueError(msg)
        return self

    def image(self, d: str) -> tuple[str, ...]:
        """Image of a directed domain edge as a tuple of directed range edges."""
        steps = self.edge_map[edge_label(d)].steps
        return steps if is_forward(d) else invert(steps)


class MarkedMap(BaseModel):
    """A self-map of a graph together with a loop around the puncture."""

    model_config = ConfigDict(frozen=True)

    map: GraphMap
    boundary: CyclicPath

    @model_validator(mode="after")
    def _check_self_map(self) -> Self:
        if self.map.domain != self.map.range:
            msg = "a marked map must have domain equal to range"
            raise ValueError(msg)
        return self

    @property
    def graph(self) -> Graph:
        return self.map.domain


class ValidationFailure(BaseModel):
    """One failed check of a validation report."""

    check: str
    message: str


class ValidationReport(BaseModel):
    """Outcome of validating a marked map; empty ``failures`` means valid."""

    failures: list[ValidationFailure] = []

    @property
    def ok(self) -> bool:
        return not self.failures

    def add(self, check: str, message: str) -> None:
        self.failures.append(ValidationFailure(check=check, message=message))

    def has(self, check: str) -> bool:
        return any(f.check == check for f in self.failures)

    def __str__(self) -> str:
        if self.ok:
            return "all checks passed"
        return "; ".join(f.message for f in self.failures)
