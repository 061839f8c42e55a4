"""Sign assignment under pairwise parity constraints.

Used to orient triangles of the torus complex, tetrahedra of a triangulation, vertex-link
triangles and edge classes of quotient complexes: every constraint ``(a, b, product)`` asks
for signs with ``sign[a] * sign[b] == product``.
"""

from collections.abc import Hashable, Iterable, Sequence

import networkx as nx


def permutation_sign(perm: Sequence[int]) -> int:
    """Sign of a permutation given as the tuple of images of ``0..n-1``."""
    inversions = sum(
        1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j]
    )
    return -1 if inversions % 2 else 1


def solve_signs[T: Hashable](
    nodes: Iterable[T], constraints: Iterable[tuple[T, T, int]]
) -> dict[T, int] | None:
    """Assign ``+1``/``-1`` to every node so all constraints hold, or return ``None``.

    Each connected component is rooted at its first node (in iteration order) with sign ``+1``.
    """
    g = nx.MultiGraph()
    g.add_nodes_from(nodes)
    constraint_list = list(constraints)
    for a, b, product in constraint_list:
        g.add_edge(a, b, product=product)

    signs: dict[T, int] = {}
    for root in g.nodes:
        if root in signs:
            continue
        signs[root] = 1
        for u, v in nx.bfs_edges(g, root):
            product = next(iter(g.get_edge_data(u, v).values()))["product"]
            signs[v] = signs[u] * product

    for a, b, product in constraint_list:
        if signs[a] * signs[b] != product:
            return None
    return signs
