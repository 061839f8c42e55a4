"""Surface checks on K: closedness, Euler characteristic, orientation and the pairing."""

from collections import defaultdict

import networkx as nx
from pydantic import BaseModel

from mtorus.core.orientation import permutation_sign, solve_signs
from mtorus.surface.models import SurfaceComplex


class SurfaceReport(BaseModel):
    """Outcome of check_surface; ``failures`` is empty when K is a torus with a valid pairing."""

    vertices: int
    edges: int
    triangles: int
    euler_characteristic: int
    closed: bool
    connected: bool
    orientable: bool
    pairing_involution: bool
    pairing_reverses_orientation: bool
    failures: list[str] = []

    @property
    def ok(self) -> bool:
        return not self.failures

    def __str__(self) -> str:
        return "; ".join(self.failures) if self.failures else "all surface checks passed"


def edge_incidence(k: SurfaceComplex) -> dict[str, list[tuple[int, int]]]:
    """Edge name -> the (triangle, side) slots it fills."""
    incidence: dict[str, list[tuple[int, int]]] = defaultdict(list)
    for t, tri in enumerate(k.triangles):
        for f, side in enumerate(tri.sides):
            incidence[side].append((t, f))
    return dict(incidence)


def orientation(k: SurfaceComplex) -> dict[int, int] | None:
    """Signs making every triangle's corner order agree with a global orientation."""
    constraints = []
    for slots in edge_incidence(k).values():
        if len(slots) != 2:
            continue
        (t, f), (u, g) = slots
        constraints.append((t, u, -1 if k.side_matching(t, f, u, g) else 1))
    return solve_signs(range(len(k.triangles)), constraints)


def check_surface(k: SurfaceComplex) -> SurfaceReport:
    failures: list[str] = []
    incidence = edge_incidence(k)
    bad = {edge: len(slots) for edge, slots in incidence.items() if len(slots) != 2}
    for edge, count in sorted(bad.items())[:5]:
        failures.append(f"edge {edge} lies in {count} triangles")
    chi = k.euler_characteristic
    if chi != 0:
        failures.append(f"Euler characteristic is {chi}, expected 0")

    adjacency = nx.Graph()
    adjacency.add_nodes_from(range(len(k.triangles)))
    adjacency.add_edges_from(
        (slots[0][0], slots[1][0]) for slots in incidence.values() if len(slots) == 2
    )
    connected = bool(k.triangles) and nx.is_connected(adjacency)
    if not connected:
        failures.append("K is not connected")

    signs = orientation(k)
    if signs is None:
        failures.append("K is not orientable")

    size = len(k.triangles)
    dangling = [p for p in k.pairs if not (0 <= p.first < size and 0 <= p.second < size)]
    if dangling:
        ids = sorted({t for p in dangling for t in (p.first, p.second) if not 0 <= t < size})
        failures.append(f"pairing names missing triangles {ids[:5]}")
    pairs = [p for p in k.pairs if p not in dangling]

    seen: defaultdict[int, int] = defaultdict(int)
    for pair in pairs:
        seen[pair.first] += 1
        seen[pair.second] += 1
    involution = not dangling and all(
        p.first != p.second and sorted(p.corners) == [0, 1, 2] for p in pairs
    )
    involution = involution and all(seen[t] == 1 for t in range(size))
    if not involution:
        unpaired = [t for t in range(size) if seen[t] != 1]
        failures.append(f"pairing is not a fixed-point-free involution (triangles {unpaired[:5]})")

    reverses = signs is not None and all(
        signs[p.first] * signs[p.second] * permutation_sign(p.corners) == -1 for p in pairs
    )
    if signs is not None and not reverses:
        failures.append("pairing does not reverse orientation")

    return SurfaceReport(
        vertices=len(k.vertices),
        edges=len(incidence),
        triangles=len(k.triangles),
        euler_characteristic=chi,
        closed=not bad,
        connected=connected,
        orientable=signs is not None,
        pairing_involution=involution,
        pairing_reverses_orientation=reverses,
        failures=failures,
    )
