"""The full pipeline: marked map -> folds -> K -> cone -> checked triangulation."""

import logging
from collections.abc import Callable

from pydantic import BaseModel, ConfigDict

from mtorus.core.models import MarkedMap
from mtorus.folding.decomposer import decompose
from mtorus.folding.models import FoldSequence
from mtorus.graphs.analysis import genus, is_immersion, is_tight
from mtorus.graphs.paths import map_size
from mtorus.surface.homology import quotient_homology
from mtorus.surface.models import SurfaceComplex
from mtorus.surface.torus import assemble_torus
from mtorus.triangulation.cone import cone_and_glue
from mtorus.triangulation.config import PipelineConfig
from mtorus.triangulation.errors import PipelineError, TriangulationError
from mtorus.triangulation.homology import first_homology, mapping_torus_homology
from mtorus.triangulation.links import LinkReport, vertex_links
from mtorus.triangulation.models import Triangulation3
from mtorus.triangulation.orbits import edge_cycles, edge_orbits, vertex_orbits

logger = logging.getLogger(__name__)


class BoundCheck(BaseModel):
    """The bound 16 (5g - 2) S(f) on the number of tetrahedra.

    The bound only holds for tight maps with every vertex of valence at least 3 that need at
    least one fold; otherwise ``applicable`` is false and ``reason`` says why.
    """

    model_config = ConfigDict(frozen=True)

    bound: int
    applicable: bool
    reason: str | None = None

    def admits(self, tetrahedra: int) -> bool:
        return not self.applicable or tetrahedra <= self.bound


def tetrahedron_bound(mm: MarkedMap) -> BoundCheck:
    g = genus(mm.graph)
    bound = 16 * (5 * g - 2) * map_size(mm.map)
    reason = None
    if not is_tight(mm.map):
        reason = "map is not tight"
    elif any(mm.graph.valence(v) < 3 for v in mm.graph.vertices):
        reason = "a vertex has valence below 3"
    elif is_immersion(mm):
        reason = "no folds"
    return BoundCheck(bound=bound, applicable=reason is None, reason=reason)


class Diagnostics(BaseModel):
    """Counts gathered along the pipeline for reports and the size analysis."""

    model_config = ConfigDict(frozen=True)

    genus: int
    sizes: tuple[int, ...]
    folds: int
    partial_folds: int
    full_folds: int
    annulus_triangles: tuple[int, ...]
    tetrahedra: int
    edge_orbits: int
    vertex_orbits: int
    links: str
    bound: BoundCheck
    homology: str | None = None

    @property
    def within_bound(self) -> bool:
        return self.bound.admits(self.tetrahedra)


class MappingTorusResult(BaseModel):
    """Everything build_mapping_torus produced, stage by stage."""

    model_config = ConfigDict(frozen=True)

    sequence: FoldSequence
    surface: SurfaceComplex
    triangulation: Triangulation3
    links: LinkReport
    diagnostics: Diagnostics


def _stage[T](name: str, action: Callable[[], T]) -> T:
    logger.debug("stage %s", name)
    try:
        return action()
    except PipelineError:
        raise
    except Exception as exc:
        raise PipelineError(name, exc) from exc


def _check_links(links: LinkReport) -> None:
    ideal = links.ideal
    if len(ideal) != 1 or ideal[0].surface != "torus":
        raise TriangulationError(f"expected a single torus cusp, found {links.summary()}")


def _verify_homology(mm: MarkedMap, k: SurfaceComplex, t: Triangulation3) -> str:
    edge_cycles(t)
    expected = mapping_torus_homology(mm)
    for where, group in (("K/e", quotient_homology(k)), ("triangulation", first_homology(t))):
        if group != expected:
            raise TriangulationError(f"H_1 of {where} is {group}, expected {expected}")
    return str(expected)


def build_mapping_torus(mm: MarkedMap, config: PipelineConfig | None = None) -> MappingTorusResult:
    """Triangulate the mapping torus of ``mm`` and check its vertex links.

    Every stage failure is raised as a PipelineError naming the stage.
    """
    cfg = config or PipelineConfig()
    sequence = _stage("decompose", lambda: decompose(mm, cfg.decomposition))
    surface = _stage("assemble_torus", lambda: assemble_torus(sequence))
    triangulation = _stage("cone_and_glue", lambda: cone_and_glue(surface))
    links = _stage("vertex_links", lambda: vertex_links(triangulation))
    _stage("vertex_links", lambda: _check_links(links))
    homology = None
    if cfg.verification == "full":
        homology = _stage("verify", lambda: _verify_homology(mm, surface, triangulation))

    diagnostics = Diagnostics(
        genus=genus(mm.graph),
        sizes=tuple(sequence.sizes),
        folds=sequence.n,
        partial_folds=sequence.partial_folds,
        full_folds=sequence.full_folds,
        annulus_triangles=tuple(a.triangle_count for a in surface.annuli),
        tetrahedra=triangulation.size,
        edge_orbits=len(edge_orbits(triangulation)),
        vertex_orbits=len(vertex_orbits(triangulation)),
        links=links.summary(),
        bound=tetrahedron_bound(mm),
        homology=homology,
    )
    if not diagnostics.within_bound:
        logger.warning(
            "%d tetrahedra exceed the bound %d", diagnostics.tetrahedra, diagnostics.bound.bound
        )
    logger.info(
        "triangulated mapping torus: %d tetrahedra, %s", triangulation.size, links.summary()
    )
    return MappingTorusResult(
        sequence=sequence,
        surface=surface,
        triangulation=triangulation,
        links=links,
        diagnostics=diagnostics,
    )
