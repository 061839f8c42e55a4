"""Graph-map operations: paths, fold candidates, validation and the marked-map format."""

from mtorus.graphs.analysis import (
    FoldCandidate,
    find_fold_candidate,
    fold_candidate_for,
    gates,
    genus,
    is_immersion,
    is_tight,
    validate,
)
from mtorus.graphs.errors import GenusError, InvalidMarkedMapError, MarkedMapParseError, PathError
from mtorus.graphs.parser import format_marked_map, parse_marked_map
from mtorus.graphs.paths import (
    apply_map,
    compose,
    identity_map,
    map_size,
    power,
    substitute,
    tighten,
)
from mtorus.graphs.trees import homology_action, spanning_tree

__all__ = [
    "FoldCandidate",
    "GenusError",
    "InvalidMarkedMapError",
    "MarkedMapParseError",
    "PathError",
    "apply_map",
    "compose",
    "find_fold_candidate",
    "fold_candidate_for",
    "format_marked_map",
    "gates",
    "genus",
    "homology_action",
    "identity_map",
    "is_immersion",
    "is_tight",
    "map_size",
    "parse_marked_map",
    "power",
    "spanning_tree",
    "substitute",
    "tighten",
    "validate",
]
