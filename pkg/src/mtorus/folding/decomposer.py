"""Decomposition of a marked map into subdivisions, folds and a terminal homeomorphism."""

import logging

from mtorus.core.edges import edge_label
from mtorus.core.models import Graph, GraphMap, MarkedMap
from mtorus.folding.config import DecompositionConfig
from mtorus.folding.errors import DecompositionError
from mtorus.folding.models import FoldSequence, FoldStep, Stage, SubdivisionStep
from mtorus.folding.steps import fold, subdivide
from mtorus.graphs.analysis import fold_candidate_for, is_tight, validate
from mtorus.graphs.errors import InvalidMarkedMapError

logger = logging.getLogger(__name__)


def decompose(mm: MarkedMap, config: DecompositionConfig | None = None) -> FoldSequence:
    """Fold until the map to the input graph is an immersion, then check it is a homeomorphism."""
    cfg = config or DecompositionConfig()
    report = validate(mm)
    if not report.ok:
        raise InvalidMarkedMapError(report)
    if cfg.require_tight and not is_tight(mm.map):
        raise DecompositionError("map is not tight")

    stage = Stage(index=0, sigma=mm.boundary, map=mm.map)
    stages = [stage]
    steps: list[SubdivisionStep | FoldStep] = []
    while (cand := fold_candidate_for(stage.map, stage.sigma)) is not None:
        if len(steps) // 2 >= cfg.max_folds:
            raise DecompositionError(f"no immersion after {cfg.max_folds} folds", stage.index)
        sub, stage = subdivide(stage, cand)
        stages.append(stage)
        new_labels = {x for pair in sub.subdivided.values() for x in pair}
        fold_step, stage = fold(stage, sub.prepared, new_labels)
        stages.append(stage)
        steps.extend((sub, fold_step))

    _check_homeomorphism(stage.map, stage.index)
    sequence = FoldSequence(original=mm, stages=stages, steps=steps, terminal=stage.map)
    logger.info(
        "decomposed into %d folds (%d partial, %d full), sizes %s",
        sequence.n,
        sequence.partial_folds,
        sequence.full_folds,
        sequence.sizes,
    )
    return sequence


def _check_homeomorphism(g: GraphMap, stage: int) -> None:
    images = [path.steps for path in g.edge_map.values()]
    labels = [edge_label(image[0]) for image in images if len(image) == 1]
    vertices = set(g.vertex_map.values())
    if (
        len(labels) != len(images)
        or len(set(labels)) != g.range.num_edges
        or len(vertices) != g.range.num_vertices
        or g.domain.num_vertices != g.range.num_vertices
    ):
        raise DecompositionError(
            "input not a homotopy-equivalence representative: the final immersion is not a "
            "graph homeomorphism",
            stage,
        )


def fold_count_bound(g: Graph) -> int:
    """Upper bound on partial folds for a tight map: the sum of (valence - 2) over vertices."""
    low = [v for v in g.vertices if g.valence(v) < 3]
    if low:
        msg = f"vertices of valence below 3: {low}"
        raise ValueError(msg)
    return sum(g.valence(v) - 2 for v in g.vertices)
