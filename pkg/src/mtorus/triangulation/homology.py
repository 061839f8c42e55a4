"""First homology of a triangulated 3-manifold and of a mapping torus from its graph map."""

from mtorus.core.models import MarkedMap
from mtorus.graphs.trees import homology_action
from mtorus.groups.smith import AbelianGroup, IntegerMatrix, chain_homology, cokernel
from mtorus.triangulation.models import Triangulation3
from mtorus.triangulation.orbits import edge_cycles


def face_pair_index(t: Triangulation3) -> dict[tuple[int, int], tuple[int, int]]:
    """(tetrahedron, face) -> (dual edge index, +1 on its canonical side or -1)."""
    index: dict[tuple[int, int], tuple[int, int]] = {}
    for i, gluing in enumerate(t.face_gluings()):
        index[(gluing.tet, gluing.face)] = (i, 1)
        index[(gluing.other, gluing.other_face)] = (i, -1)
    return index


def first_homology(t: Triangulation3) -> AbelianGroup:
    """H_1 of the manifold with its vertices removed, from the dual cell complex.

    Tetrahedra are 0-cells, glued face pairs are 1-cells and edge cycles bound the 2-cells.
    Removing a finite vertex does not change H_1.
    """
    pairs = face_pair_index(t)
    gluings = list(t.face_gluings())
    d1 = IntegerMatrix(rows=t.size, cols=len(gluings))
    for i, gluing in enumerate(gluings):
        d1.add(gluing.other, i, 1)
        d1.add(gluing.tet, i, -1)

    cycles = edge_cycles(t)
    d2 = IntegerMatrix(rows=len(gluings), cols=len(cycles))
    for j, cycle in enumerate(cycles):
        for exit_slot in cycle.exits:
            i, sign = pairs[exit_slot]
            d2.add(i, j, sign)
    return chain_homology(d2, d1)


def mapping_torus_homology(mm: MarkedMap) -> AbelianGroup:
    """Z + coker(f_* - I), read off the graph map alone."""
    action = homology_action(mm.map)
    n = len(action)
    shifted = IntegerMatrix.from_rows(
        [[action[i][j] - (1 if i == j else 0) for j in range(n)] for i in range(n)], cols=n
    )
    quotient = cokernel(shifted)
    return AbelianGroup(rank=quotient.rank + 1, torsion=quotient.torsion)
