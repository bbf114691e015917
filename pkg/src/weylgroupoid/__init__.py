"""Weyl groupoids of crystallographic arrangements, their restrictions, and
Hilbert series of diagonal Nichols algebras."""

from .errors import (
    AutomorphismError,
    BraidingError,
    InvalidRootSet,
    NotCartanObject,
    NotFinite,
    RestrictionError,
    WeylGroupoidError,
)
from .exact import UnityRoot, primitive
from .groupoid import CartanGraph, enumerate_objects, verify_axioms, weyl_path
from .nichols import BraidingMatrix, HilbertSeries, cartan_from_braiding, hilbert_full
from .restriction import RootMultiset, restrict_parabolic, restrict_permutation
from .rootsys import RootSet, canonical_form, cartan_from_roots, reflect_object

__all__ = [
    "AutomorphismError", "BraidingError", "BraidingMatrix", "CartanGraph", "HilbertSeries",
    "InvalidRootSet", "NotCartanObject", "NotFinite", "RestrictionError", "RootMultiset",
    "RootSet", "UnityRoot", "WeylGroupoidError", "canonical_form", "cartan_from_braiding",
    "cartan_from_roots", "enumerate_objects", "hilbert_full", "primitive", "reflect_object",
    "restrict_parabolic", "restrict_permutation", "verify_axioms", "weyl_path",
]
