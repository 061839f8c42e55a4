"""Tetrahedral triangulations: coning K, orbits, vertex links, homology and the pipeline."""

from mtorus.triangulation.cone import cone_and_glue
from mtorus.triangulation.config import PipelineConfig
from mtorus.triangulation.errors import PipelineError, TriangulationError
from mtorus.triangulation.homology import first_homology, mapping_torus_homology
from mtorus.triangulation.isomorphism import canonical_form, is_isomorphic
from mtorus.triangulation.links import LinkReport, VertexLink, surface_name, vertex_links
from mtorus.triangulation.models import FaceGluing, Tetrahedron, Triangulation3
from mtorus.triangulation.orbits import (
    EdgeCycle,
    EdgeOrbit,
    edge_cycles,
    edge_orbits,
    vertex_orbits,
)
from mtorus.triangulation.orient import is_orientable, orient, orientation_signs, relabel
from mtorus.triangulation.pipeline import (
    BoundCheck,
    Diagnostics,
    MappingTorusResult,
    build_mapping_torus,
    tetrahedron_bound,
)
from mtorus.triangulation.presentation import triangulation_presentation

__all__ = [
    "BoundCheck",
    "Diagnostics",
    "EdgeCycle",
    "EdgeOrbit",
    "FaceGluing",
    "LinkReport",
    "MappingTorusResult",
    "PipelineConfig",
    "PipelineError",
    "Tetrahedron",
    "Triangulation3",
    "TriangulationError",
    "VertexLink",
    "build_mapping_torus",
    "canonical_form",
    "cone_and_glue",
    "edge_cycles",
    "edge_orbits",
    "first_homology",
    "is_isomorphic",
    "is_orientable",
    "mapping_torus_homology",
    "orient",
    "orientation_signs",
    "relabel",
    "surface_name",
    "tetrahedron_bound",
    "triangulation_presentation",
    "vertex_links",
    "vertex_orbits",
]
