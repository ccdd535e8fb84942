"""Exact arithmetic for pointed hyperelliptic models over Z[1/S]."""

from .decompose import decompose_recursive, reverse, shift_to_nonzero_constant, split
from .enumeration import canonical_class, enumerate_split_models, s_unit_solutions
from .exactmath import Poly, PrimeSet, discriminant, rational_roots, resultant, support
from .fiberprod import fiber_genus, genus_of_even_model
from .hypermodel import (
    PointedModel,
    complete_the_square,
    good_reduction_outside,
    lockhart_discriminant,
    reduction_bijection_check,
    weierstrass_points,
)

__version__ = "0.1.0"

__all__ = [
    "Poly",
    "PrimeSet",
    "PointedModel",
    "canonical_class",
    "complete_the_square",
    "decompose_recursive",
    "discriminant",
    "enumerate_split_models",
    "fiber_genus",
    "genus_of_even_model",
    "good_reduction_outside",
    "lockhart_discriminant",
    "rational_roots",
    "reduction_bijection_check",
    "resultant",
    "reverse",
    "s_unit_solutions",
    "shift_to_nonzero_constant",
    "split",
    "support",
    "weierstrass_points",
]
