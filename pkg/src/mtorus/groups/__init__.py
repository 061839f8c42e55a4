"""Group presentations, Tietze and Whitehead simplification, and integer homology."""

from mtorus.groups.config import TietzeConfig, WhiteheadConfig
from mtorus.groups.errors import PresentationError
from mtorus.groups.hnn import pi1_presentation
from mtorus.groups.presentation import Presentation, abelianization, exponent_matrix
from mtorus.groups.smith import (
    AbelianGroup,
    IntegerMatrix,
    SmithForm,
    chain_homology,
    cokernel,
    smith_form,
)
from mtorus.groups.tietze import tietze_simplify
from mtorus.groups.whitehead import (
    canonical_key,
    presentations_related,
    whitehead_normal_form,
)
from mtorus.groups.words import find_renaming, words_cyclically_equal

__all__ = [
    "AbelianGroup",
    "IntegerMatrix",
    "Presentation",
    "PresentationError",
    "SmithForm",
    "TietzeConfig",
    "WhiteheadConfig",
    "abelianization",
    "canonical_key",
    "chain_homology",
    "cokernel",
    "exponent_matrix",
    "find_renaming",
    "pi1_presentation",
    "presentations_related",
    "smith_form",
    "tietze_simplify",
    "whitehead_normal_form",
    "words_cyclically_equal",
]
