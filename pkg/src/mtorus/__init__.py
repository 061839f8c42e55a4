"""mtorus: triangulated mapping tori of punctured-surface homeomorphisms from graph maps."""

from mtorus.core import (
    CyclicPath,
    EdgePath,
    Graph,
    GraphMap,
    MarkedMap,
    TriangulationWriter,
    ValidationReport,
)
from mtorus.folding import DecompositionConfig, DecompositionError, FoldSequence, decompose
from mtorus.graphs import map_size, parse_marked_map, validate
from mtorus.groups import (
    AbelianGroup,
    Presentation,
    abelianization,
    pi1_presentation,
    presentations_related,
    tietze_simplify,
    words_cyclically_equal,
)
from mtorus.snappea import SnapPeaWriter, read_snappea, write_snappea
from mtorus.surface import SurfaceComplex, assemble_torus
from mtorus.tg import TgWriter, emit_tg, parse_tg, realize
from mtorus.triangulation import (
    LinkReport,
    MappingTorusResult,
    PipelineConfig,
    PipelineError,
    Triangulation3,
    build_mapping_torus,
    cone_and_glue,
    first_homology,
    tetrahedron_bound,
    vertex_links,
)

__version__ = "0.1.0"
__all__ = [
    "AbelianGroup",
    "CyclicPath",
    "DecompositionConfig",
    "DecompositionError",
    "EdgePath",
    "FoldSequence",
    "Graph",
    "GraphMap",
    "LinkReport",
    "MappingTorusResult",
    "MarkedMap",
    "PipelineConfig",
    "PipelineError",
    "Presentation",
    "SnapPeaWriter",
    "SurfaceComplex",
    "TgWriter",
    "Triangulation3",
    "TriangulationWriter",
    "ValidationReport",
    "__version__",
    "abelianization",
    "assemble_torus",
    "build_mapping_torus",
    "cone_and_glue",
    "decompose",
    "emit_tg",
    "first_homology",
    "map_size",
    "parse_marked_map",
    "parse_tg",
    "pi1_presentation",
    "presentations_related",
    "read_snappea",
    "realize",
    "tetrahedron_bound",
    "tietze_simplify",
    "validate",
    "vertex_links",
    "words_cyclically_equal",
    "write_snappea",
]
