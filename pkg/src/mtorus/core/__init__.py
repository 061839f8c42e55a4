"""Core models and protocols for mtorus."""

from mtorus.core.models import (
    CyclicPath,
    EdgePath,
    Graph,
    GraphMap,
    MarkedMap,
    ValidationFailure,
    ValidationReport,
)
from mtorus.core.protocols import TriangulationWriter

__all__ = [
    "CyclicPath",
    "EdgePath",
    "Graph",
    "GraphMap",
    "MarkedMap",
    "TriangulationWriter",
    "ValidationFailure",
    "ValidationReport",
]
