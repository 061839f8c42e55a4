"""SnapPea ``% Triangulation`` files: cusp assignment, writer and a reader for round trips."""

from mtorus.snappea.errors import SnapPeaError, SnapPeaParseError
from mtorus.snappea.models import SnapPeaFile, SnapPeaTetrahedron
from mtorus.snappea.reader import read_snappea
from mtorus.snappea.writer import SnapPeaWriter, cusp_assignment, to_snappea_file, write_snappea

__all__ = [
    "SnapPeaError",
    "SnapPeaFile",
    "SnapPeaParseError",
    "SnapPeaTetrahedron",
    "SnapPeaWriter",
    "cusp_assignment",
    "read_snappea",
    "to_snappea_file",
    "write_snappea",
]
