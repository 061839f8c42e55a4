"""First homology of the quotient K/e by cellular chains."""

from networkx.utils import UnionFind

from mtorus.core.orientation import solve_signs
from mtorus.groups.smith import AbelianGroup, IntegerMatrix, chain_homology
from mtorus.surface.checks import edge_incidence
from mtorus.surface.errors import SurfaceError
from mtorus.surface.models import SurfaceComplex


def quotient_homology(k: SurfaceComplex) -> AbelianGroup:
    """H_1 of K with every triangle glued to its partner.

    Cells are vertex classes, signed edge classes and one 2-cell per triangle pair.
    """
    incidence = edge_incidence(k)
    # sign of each slot relative to the edge's first slot
    relative: dict[tuple[int, int], int] = {}
    reference: dict[str, tuple[int, int]] = {}
    for edge, slots in incidence.items():
        t0, f0 = slots[0]
        reference[edge] = k.triangles[t0].side_endpoints(f0)
        for t, f in slots:
            relative[(t, f)] = 1 if k.side_matching(t0, f0, t, f) else -1

    constraints: list[tuple[str, str, int]] = []
    vertex_classes: UnionFind = UnionFind(k.vertices)
    edge_classes: UnionFind = UnionFind(incidence)
    for pair in k.pairs:
        first, second = k.triangles[pair.first], k.triangles[pair.second]
        for c in range(3):
            vertex_classes.union(
                k.canonical[first.corners[c]], k.canonical[second.corners[pair.corners[c]]]
            )
        for f in range(3):
            g = pair.corners[f]
            same = pair.corners[(f + 1) % 3] == (g + 1) % 3
            product = relative[(pair.first, f)] * relative[(pair.second, g)] * (1 if same else -1)
            constraints.append((first.sides[f], second.sides[g], product))
            edge_classes.union(first.sides[f], second.sides[g])

    signs = solve_signs(incidence, constraints)
    if signs is None:
        raise SurfaceError("the pairing identifies an edge of K with its reverse")

    vertex_roots = sorted({vertex_classes[v] for v in k.vertices})
    vertex_index = {root: i for i, root in enumerate(vertex_roots)}
    edge_roots = sorted({edge_classes[e] for e in incidence})
    edge_index = {root: i for i, root in enumerate(edge_roots)}

    d1 = IntegerMatrix(rows=len(vertex_index), cols=len(edge_index))
    for root in edge_roots:
        x1, x2 = reference[root]
        col = edge_index[root]
        d1.add(vertex_index[vertex_classes[k.canonical[x2]]], col, signs[root])
        d1.add(vertex_index[vertex_classes[k.canonical[x1]]], col, -signs[root])

    d2 = IntegerMatrix(rows=len(edge_index), cols=len(k.pairs))
    for col, pair in enumerate(k.pairs):
        for f, edge in enumerate(k.triangles[pair.first].sides):
            d2.add(edge_index[edge_classes[edge]], col, relative[(pair.first, f)] * signs[edge])
    return chain_homology(d2, d1)
