"""Edge-path substitution, tightening and composition of graph maps."""

from typing import overload

from mtorus.core.edges import cyclic_reduce, edge_label, free_reduce
from mtorus.core.models import CyclicPath, EdgePath, Graph, GraphMap, MarkedMap
from mtorus.graphs.errors import PathError


def check_composable(graph: Graph, steps: tuple[str, ...], cyclic: bool = False) -> None:
    """Raise PathError unless consecutive steps meet (and close up, when cyclic)."""
    for k, d in enumerate(steps):
        if not graph.has_direction(d):
            raise PathError(f"unknown edge {d}", k)
        if k and graph.terminal(steps[k - 1]) != graph.initial(d):
            raise PathError(f"{steps[k - 1]} does not end where {d} starts", k)
    if cyclic and steps and graph.terminal(steps[-1]) != graph.initial(steps[0]):
        raise PathError("cyclic path does not close up", len(steps) - 1)


@overload
def tighten(path: EdgePath, graph: Graph | None = None) -> EdgePath: ...
@overload
def tighten(path: CyclicPath, graph: Graph | None = None) -> CyclicPath: ...


def tighten(path: EdgePath | CyclicPath, graph: Graph | None = None) -> EdgePath | CyclicPath:
    """Return the reduced path freely equal to ``path``.

    Cyclic paths are also reduced across the wrap-around. When ``graph`` is given the input
    is first checked for composability.
    """
    if isinstance(path, CyclicPath):
        if graph is not None:
            check_composable(graph, path.steps, cyclic=True)
        return CyclicPath(steps=cyclic_reduce(path.steps))
    if graph is not None:
        check_composable(graph, path.steps)
    return EdgePath(steps=free_reduce(path.steps))


def is_tight_path(steps: tuple[str, ...], cyclic: bool = False) -> bool:
    reduced = cyclic_reduce(steps) if cyclic else free_reduce(steps)
    return len(reduced) == len(steps)


def substitute(m: GraphMap, steps: tuple[str, ...]) -> tuple[str, ...]:
    """Concatenate the images of ``steps`` under ``m`` without tightening."""
    out: list[str] = []
    for k, d in enumerate(steps):
        if edge_label(d) not in m.edge_map:
            raise PathError(f"{d} is not an edge of the map's domain", k)
        out.extend(m.image(d))
    return tuple(out)


@overload
def apply_map(m: GraphMap, path: EdgePath) -> EdgePath: ...
@overload
def apply_map(m: GraphMap, path: CyclicPath) -> CyclicPath: ...


def apply_map(m: GraphMap, path: EdgePath | CyclicPath) -> EdgePath | CyclicPath:
    """Apply a graph map to a path by edge substitution; the result is not tightened."""
    steps = substitute(m, path.steps)
    if isinstance(path, CyclicPath):
        return CyclicPath(steps=steps)
    return EdgePath(steps=steps)


def compose(second: GraphMap, first: GraphMap) -> GraphMap:
    """Return ``second`` after ``first``, with every edge image tightened."""
    if first.range != second.domain:
        raise PathError("cannot compose: range of the first map is not the second's domain")
    return GraphMap(
        domain=first.domain,
        range=second.range,
        vertex_map={v: second.vertex_map[w] for v, w in first.vertex_map.items()},
        edge_map={
            label: EdgePath(steps=free_reduce(substitute(second, path.steps)))
            for label, path in first.edge_map.items()
        },
    )


def power(mm: MarkedMap, k: int) -> MarkedMap:
    """The ``k``-th iterate of a marked map, keeping its boundary loop."""
    if k < 1:
        msg = "power must be at least 1"
        raise ValueError(msg)
    result = mm.map
    for _ in range(k - 1):
        result = compose(mm.map, result)
    return MarkedMap(map=result, boundary=mm.boundary)


def map_size(m: GraphMap) -> int:
    """Sum of the lengths of the edge images."""
    return sum(len(path) for path in m.edge_map.values())


def identity_map(graph: Graph) -> GraphMap:
    return GraphMap(
        domain=graph,
        range=graph,
        vertex_map={v: v for v in graph.vertices},
        edge_map={label: EdgePath(steps=(label,)) for label in graph.edges},
    )
