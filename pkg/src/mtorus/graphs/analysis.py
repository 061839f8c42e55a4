"""Fold candidates, genus, tightness and validation of marked maps."""

from collections import Counter

from pydantic import BaseModel, ConfigDict

from mtorus.core.edges import cyclic_reduce, invert, reverse_edge
from mtorus.core.models import CyclicPath, Graph, GraphMap, MarkedMap, ValidationReport
from mtorus.graphs.errors import GenusError, PathError
from mtorus.graphs.paths import check_composable, is_tight_path, substitute


class FoldCandidate(BaseModel):
    """Two directions at a common vertex whose images share a prefix of length ``k``."""

    model_config = ConfigDict(frozen=True)

    d1: str
    d2: str
    k: int

    def __str__(self) -> str:
        return f"({self.d1}, {self.d2}, k={self.k})"


def common_prefix_length(first: tuple[str, ...], second: tuple[str, ...]) -> int:
    k = 0
    for x, y in zip(first, second, strict=False):
        if x != y:
            break
        k += 1
    return k


def fold_candidate_for(m: GraphMap, boundary: CyclicPath) -> FoldCandidate | None:
    """Scan consecutive pairs of ``boundary`` in spelling order for cancelling images.

    ``m`` maps the graph carrying ``boundary`` to some target graph; it need not be a
    self-map, which lets the decomposition reuse this scan at every stage.
    """
    steps = boundary.steps
    n = len(steps)
    for i in range(n):
        e1, e2 = steps[i], steps[(i + 1) % n]
        image1, image2 = m.image(e1), m.image(e2)
        if not image1 or not image2 or image1[-1] != reverse_edge(image2[0]):
            continue
        d1, d2 = reverse_edge(e1), e2
        k = common_prefix_length(m.image(d1), m.image(d2))
        return FoldCandidate(d1=d1, d2=d2, k=k)
    return None


def find_fold_candidate(mm: MarkedMap) -> FoldCandidate | None:
    """First pair of adjacent directions in sigma whose images cancel, if any."""
    return fold_candidate_for(mm.map, mm.boundary)


def is_immersion(mm: MarkedMap) -> bool:
    return find_fold_candidate(mm) is None


def genus(graph: Graph) -> int:
    """Genus of the once-punctured surface with spine ``graph``: (1 + E - V) / 2."""
    if not graph.is_connected():
        msg = "graph is not connected"
        raise GenusError(msg)
    twice = 1 + graph.num_edges - graph.num_vertices
    if twice < 0 or twice % 2:
        msg = (
            f"graph with {graph.num_vertices} vertices and {graph.num_edges} edges "
            "is not the spine of a once-punctured surface"
        )
        raise GenusError(msg)
    return twice // 2


def gates(m: GraphMap, v: int) -> list[list[str]]:
    """Partition the directions at ``v`` by the first step of their images.

    Directions with empty images form singleton gates.
    """
    classes: dict[str, list[str]] = {}
    singletons: list[list[str]] = []
    for d in m.domain.outgoing(v):
        image = m.image(d)
        if not image:
            singletons.append([d])
            continue
        classes.setdefault(image[0], []).append(d)
    return list(classes.values()) + singletons


def is_tight(m: GraphMap) -> bool:
    """Immersed edge images and at least two gates at every vertex."""
    if any(not path.steps or not is_tight_path(path.steps) for path in m.edge_map.values()):
        return False
    return all(len(gates(m, v)) >= 2 for v in m.domain.vertices)


def _is_rotation(steps: tuple[str, ...], target: tuple[str, ...]) -> bool:
    if len(steps) != len(target):
        return False
    return CyclicPath(steps=target).rotation_offset(CyclicPath(steps=steps)) is not None


def validate(mm: MarkedMap) -> ValidationReport:
    """Check the standing assumptions on a marked map and list every failure."""
    report = ValidationReport()
    graph = mm.graph
    f = mm.map

    if not graph.is_connected():
        report.add("connected", "graph is not connected")

    for label, path in f.edge_map.items():
        if not path.steps:
            report.add("edge_image_empty", f"image of {label} is empty")
            continue
        if not is_tight_path(path.steps):
            report.add("edge_image_tight", f"image of {label} is not tight: {path}")
        try:
            check_composable(graph, path.steps)
        except PathError as exc:
            report.add("endpoints", f"image of {label} is not a path: {exc}")
            continue
        start, end = graph.initial(path.steps[0]), graph.terminal(path.steps[-1])
        initial, terminal = graph.edges[label]
        if start != f.vertex_map[initial] or end != f.vertex_map[terminal]:
            report.add(
                "endpoints",
                f"image of {label} runs {start}->{end}, "
                f"expected {f.vertex_map[initial]}->{f.vertex_map[terminal]}",
            )

    sigma = mm.boundary.steps
    try:
        check_composable(graph, sigma, cyclic=True)
    except PathError as exc:
        report.add("boundary_composable", f"sigma is not a closed path: {exc}")
        return report

    if not is_tight_path(sigma, cyclic=True):
        report.add("boundary_tight", "sigma is not cyclically tight")

    counts = Counter(sigma)
    for label in graph.edges:
        if counts[label] != 1 or counts[reverse_edge(label)] != 1:
            report.add(
                "boundary_like",
                f"sigma not boundary-like: {label} must be traversed once in each direction",
            )
            break

    if report.has("edge_image_empty") or report.has("endpoints"):
        return report
    image = cyclic_reduce(substitute(f, sigma))
    if not _is_rotation(image, sigma):
        if _is_rotation(image, invert(sigma)):
            report.add(
                "orientation_reversing",
                "f(sigma) is sigma reversed: orientation-reversing maps are not supported",
            )
        else:
            report.add("boundary_invariant", "f(sigma) is not a rotation of sigma")
    return report

