"""Spanning trees, tree collapse and the induced action on first homology."""

import networkx as nx

from mtorus.core.edges import edge_label, free_reduce, invert, is_forward, reverse_edge
from mtorus.core.models import Graph, GraphMap
from mtorus.graphs.errors import GenusError
from mtorus.graphs.paths import substitute


def spanning_tree(graph: Graph) -> dict[int, str]:
    """Breadth-first spanning tree rooted at the lowest-index vertex.

    Returns, for every non-root vertex, the directed tree edge arriving at it.
    """
    if not graph.is_connected():
        msg = "graph is not connected"
        raise GenusError(msg)
    root = min(graph.vertices)
    parent: dict[int, str] = {}
    seen = {root}
    for u, v, label in nx.edge_bfs(graph.to_networkx(), root):
        if v in seen:
            continue
        seen.add(v)
        forward = graph.initial(label) == u and graph.terminal(label) == v
        parent[v] = label if forward else reverse_edge(label)
    return parent


def tree_labels(tree: dict[int, str]) -> set[str]:
    return {edge_label(d) for d in tree.values()}


def tree_path(graph: Graph, tree: dict[int, str], v: int) -> tuple[str, ...]:
    """The tree path from the root to ``v``."""
    steps: list[str] = []
    while v in tree:
        d = tree[v]
        steps.append(d)
        v = graph.initial(d)
    return tuple(reversed(steps))


def generator_loop(graph: Graph, tree: dict[int, str], label: str) -> tuple[str, ...]:
    """The based loop through the non-tree edge ``label``."""
    return (
        tree_path(graph, tree, graph.initial(label))
        + (label,)
        + invert(tree_path(graph, tree, graph.terminal(label)))
    )


def collapse_tree(steps: tuple[str, ...], collapsed: set[str]) -> tuple[str, ...]:
    """Drop tree edges from a path and freely reduce what is left."""
    return free_reduce(d for d in steps if edge_label(d) not in collapsed)


def induced_generator_images(m: GraphMap) -> dict[str, tuple[str, ...]]:
    """Images of the free-group generators (non-tree edges) under a self-map.

    Each generator's based loop is mapped, tightened and pushed through the tree collapse.
    """
    graph = m.domain
    tree = spanning_tree(graph)
    collapsed = tree_labels(tree)
    generators = [label for label in graph.edges if label not in collapsed]
    return {
        x: collapse_tree(free_reduce(substitute(m, generator_loop(graph, tree, x))), collapsed)
        for x in generators
    }


def homology_action(m: GraphMap) -> list[list[int]]:
    """Matrix of f_* on H_1(G); column ``j`` is the image of the ``j``-th generator."""
    images = induced_generator_images(m)
    generators = list(images)
    index = {x: i for i, x in enumerate(generators)}
    matrix = [[0] * len(generators) for _ in generators]
    for j, x in enumerate(generators):
        for d in images[x]:
            matrix[index[edge_label(d)]][j] += 1 if is_forward(d) else -1
    return matrix
