"""Stallings-fold decomposition of marked maps."""

from mtorus.folding.config import DecompositionConfig
from mtorus.folding.decomposer import decompose, fold_count_bound
from mtorus.folding.errors import DecompositionError, FoldError
from mtorus.folding.models import FoldSequence, FoldStep, Stage, SubdivisionStep
from mtorus.folding.steps import fold, subdivide
from mtorus.folding.trace import format_trace

__all__ = [
    "DecompositionConfig",
    "DecompositionError",
    "FoldError",
    "FoldSequence",
    "FoldStep",
    "Stage",
    "SubdivisionStep",
    "decompose",
    "fold",
    "fold_count_bound",
    "format_trace",
    "subdivide",
]
