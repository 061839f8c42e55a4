"""The triangulated torus K with its orientation-reversing face pairing."""

from mtorus.surface.annuli import (
    build_fold_annulus,
    build_homeomorphism_annulus,
    build_subdivision_annulus,
)
from mtorus.surface.checks import SurfaceReport, check_surface
from mtorus.surface.dump import dump_off
from mtorus.surface.errors import SurfaceError
from mtorus.surface.homology import quotient_homology
from mtorus.surface.models import (
    Annulus,
    AnnulusPiece,
    CircleSpelling,
    SurfaceComplex,
    Triangle,
    TrianglePair,
)
from mtorus.surface.torus import assemble_torus

__all__ = [
    "Annulus",
    "AnnulusPiece",
    "CircleSpelling",
    "SurfaceComplex",
    "SurfaceError",
    "SurfaceReport",
    "Triangle",
    "TrianglePair",
    "assemble_torus",
    "build_fold_annulus",
    "build_homeomorphism_annulus",
    "build_subdivision_annulus",
    "check_surface",
    "dump_off",
    "quotient_homology",
]
