"""Fundamental group of a triangulation from its dual 2-complex."""

import networkx as nx

from mtorus.core.edges import cyclic_reduce, reverse_edge
from mtorus.groups.presentation import Presentation
from mtorus.triangulation.homology import face_pair_index
from mtorus.triangulation.models import Triangulation3
from mtorus.triangulation.orbits import edge_cycles


def dual_tree(t: Triangulation3) -> set[int]:
    """Indices of the face pairs in a breadth-first spanning tree of the dual graph."""
    dual = nx.MultiGraph()
    dual.add_nodes_from(range(t.size))
    for i, gluing in enumerate(t.face_gluings()):
        dual.add_edge(gluing.tet, gluing.other, key=i)
    tree: set[int] = set()
    if not t.size:
        return tree
    seen = {0}
    for _, v, key in nx.edge_bfs(dual, 0):
        if v not in seen:
            seen.add(v)
            tree.add(key)
    return tree


def triangulation_presentation(t: Triangulation3) -> Presentation:
    """Generators are the face pairs off a dual spanning tree, one relator per edge.

    The group is that of the manifold with its vertices removed. Generator ``x{i}`` is face
    pair ``i`` in face_gluings order.
    """
    pairs = face_pair_index(t)
    tree = dual_tree(t)
    count = sum(1 for _ in t.face_gluings())
    generators = tuple(f"x{i}" for i in range(count) if i not in tree)
    relators = []
    for cycle in edge_cycles(t):
        word: list[str] = []
        for slot in cycle.exits:
            i, sign = pairs[slot]
            if i not in tree:
                word.append(f"x{i}" if sign > 0 else reverse_edge(f"x{i}"))
        relators.append(cyclic_reduce(word))
    return Presentation(generators=generators, relators=tuple(relators)).normalized()
