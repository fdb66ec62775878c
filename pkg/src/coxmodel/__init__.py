"""Exact character combinatorics for perfect models of Weyl groups."""

from .char_ring import VirtualCharacter, char_of, irr_universe, is_multiplicity_free, twist
from .classification import (
    classify,
    classify_dihedral,
    classify_h3,
    d_even_nonexistence,
    is_perfect_symbolic,
    known_model,
    search_perfect_models,
)
from .lr import lr_coefficient, lr_expand
from .model_index import (
    ModelIndex,
    canonical_form,
    character_of_index,
    enumerate_indices,
    equivalence_orbit,
    format_index,
    normalize,
    transform,
)

__all__ = [
    "ModelIndex",
    "VirtualCharacter",
    "canonical_form",
    "char_of",
    "character_of_index",
    "classify",
    "classify_dihedral",
    "classify_h3",
    "d_even_nonexistence",
    "enumerate_indices",
    "equivalence_orbit",
    "format_index",
    "irr_universe",
    "is_multiplicity_free",
    "is_perfect_symbolic",
    "known_model",
    "lr_coefficient",
    "lr_expand",
    "normalize",
    "search_perfect_models",
    "transform",
    "twist",
]

__version__ = "0.1.0"
