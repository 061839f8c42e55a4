"""Single subdivision and fold steps on a stage of the decomposition."""

import logging
from collections.abc import Collection

from mtorus.core.edges import cyclic_reduce, edge_label, invert, is_forward, reverse_edge
from mtorus.core.models import CyclicPath, EdgePath, Graph, GraphMap
from mtorus.folding.errors import DecompositionError, FoldError
from mtorus.folding.models import FoldStep, Stage, SubdivisionStep
from mtorus.graphs.analysis import FoldCandidate
from mtorus.graphs.paths import map_size, substitute

logger = logging.getLogger(__name__)


def fresh_labels(label: str, taken: Collection[str]) -> tuple[str, str]:
    """Return ``<label>_1``/``<label>_2``, renumbered upwards if either name is taken."""
    j = 1
    while f"{label}_{j}" in taken or f"{label}_{j + 1}" in taken:
        j += 2
    return f"{label}_{j}", f"{label}_{j + 1}"


def subdivide(stage: Stage, cand: FoldCandidate) -> tuple[SubdivisionStep, Stage]:
    """Split the candidate's edges so both directions start with a segment of image length k.

    An edge whose whole image is the common prefix stays intact. A forward direction gets its
    first half as the fold segment; a reversed direction gets the second half of its edge.
    """
    graph, g = stage.graph, stage.map
    if edge_label(cand.d1) == edge_label(cand.d2):
        raise FoldError("fold candidate uses both directions of one edge", cand)

    vertices = list(graph.vertices)
    edges: dict[str, tuple[int, int]] = {}
    s_images: dict[str, EdgePath] = {}
    g_images: dict[str, EdgePath] = {}
    vertex_map = dict(g.vertex_map)
    subdivided: dict[str, tuple[str, str]] = {}
    prepared: dict[str, str] = {}
    taken = set(graph.edges)

    split = {edge_label(d): d for d in (cand.d1, cand.d2)}
    for label, (initial, terminal) in graph.edges.items():
        image = g.edge_map[label].steps
        d = split.get(label)
        if d is None or len(image) == cand.k:
            edges[label] = (initial, terminal)
            s_images[label] = EdgePath(steps=(label,))
            g_images[label] = EdgePath(steps=image)
            if d is not None:
                prepared[d] = d
            continue
        if len(image) < cand.k:
            raise FoldError(f"common prefix is longer than the image of {label}", cand)

        x1, x2 = fresh_labels(label, taken)
        taken.update((x1, x2))
        mid = max(vertices) + 1
        vertices.append(mid)
        edges[x1] = (initial, mid)
        edges[x2] = (mid, terminal)
        cut = cand.k if is_forward(d) else len(image) - cand.k
        g_images[x1] = EdgePath(steps=image[:cut])
        g_images[x2] = EdgePath(steps=image[cut:])
        vertex_map[mid] = g.range.terminal(image[cut - 1])
        s_images[label] = EdgePath(steps=(x1, x2))
        subdivided[label] = (x1, x2)
        prepared[d] = x1 if is_forward(d) else reverse_edge(x2)

    new_graph = Graph(vertices=tuple(vertices), edges=edges)
    s = GraphMap(
        domain=graph,
        range=new_graph,
        vertex_map={v: v for v in graph.vertices},
        edge_map=s_images,
    )
    g_new = GraphMap(
        domain=new_graph,
        range=g.range,
        vertex_map=vertex_map,
        edge_map=g_images,
    )
    step = SubdivisionStep(
        s=s,
        subdivided=subdivided,
        candidate=cand,
        prepared=FoldCandidate(d1=prepared[cand.d1], d2=prepared[cand.d2], k=cand.k),
    )
    sigma = CyclicPath(steps=substitute(s, stage.sigma.steps))
    logger.debug("subdivided %s for %s", ", ".join(subdivided) or "nothing", cand)
    return step, Stage(index=stage.index + 1, sigma=sigma, map=g_new)


def fold(
    stage: Stage, cand: FoldCandidate, subdivided: Collection[str] = ()
) -> tuple[FoldStep, Stage]:
    """Identify direction ``cand.d1`` with ``cand.d2``, keeping the label of ``d2``.

    ``subdivided`` lists the edge labels created by the preceding subdivision; the fold is
    partial when both identified edges are among them. When ``d1`` and ``d2`` are the only
    directions at their initial vertex, sigma cancels at both corners there; the arc
    ``~d1 d2`` is then contracted to a point and neither edge survives.
    """
    graph, g = stage.graph, stage.map
    d1, d2 = cand.d1, cand.d2
    if g.image(d1) != g.image(d2):
        raise FoldError("directions to identify have different images", cand)
    if graph.initial(d1) != graph.initial(d2):
        raise FoldError("directions to identify do not share an initial vertex", cand)
    gone, kept = graph.terminal(d1), graph.terminal(d2)
    if gone == kept:
        raise DecompositionError(
            f"input not a homotopy-equivalence representative: folding {d1} onto {d2} "
            "would identify two edges with the same endpoints",
            stage.index,
        )

    apex = graph.initial(d1)
    collapsed = graph.valence(apex) == 2
    removed = {edge_label(d1), edge_label(d2)} if collapsed else {edge_label(d1)}
    dropped = {gone, apex} if collapsed else {gone}
    merge = {v: (kept if v in dropped else v) for v in graph.vertices}
    edges = {
        label: (merge[initial], merge[terminal])
        for label, (initial, terminal) in graph.edges.items()
        if label not in removed
    }
    new_graph = Graph(vertices=tuple(v for v in graph.vertices if v not in dropped), edges=edges)

    p_images = {label: EdgePath(steps=(label,)) for label in edges}
    if collapsed:
        p_images.update({label: EdgePath() for label in removed})
    else:
        p_images[edge_label(d1)] = EdgePath(steps=(d2,) if is_forward(d1) else invert((d2,)))
    p = GraphMap(domain=graph, range=new_graph, vertex_map=merge, edge_map=p_images)

    g_new = GraphMap(
        domain=new_graph,
        range=g.range,
        vertex_map={v: g.vertex_map[v] for v in new_graph.vertices},
        edge_map={label: g.edge_map[label] for label in edges},
    )
    both = edge_label(d1) in subdivided and edge_label(d2) in subdivided
    step = FoldStep(
        p=p,
        identified=(d1, d2),
        kind="partial" if both else "full",
        size_before=map_size(g),
        size_after=map_size(g_new),
        collapsed=collapsed,
    )
    sigma = CyclicPath(steps=cyclic_reduce(substitute(p, stage.sigma.steps)))
    logger.debug(
        "%s fold %s onto %s: size %d -> %d%s",
        step.kind,
        d1,
        d2,
        step.size_before,
        step.size_after,
        ", arc contracted" if collapsed else "",
    )
    return step, Stage(index=stage.index + 1, sigma=sigma, map=g_new)
