"""
Affine Weyl Groups
Root data, extended affine Weyl group arithmetic, Bruhat order and the type A window model
"""

from .affine_root import AffineRoot, simple_affine_root
from .bruhat import BruhatIntervals, bruhat_leq, elements_up_to_length
from .element_grammar import format_element, parse_element
from .errors import AffineKLError
from .factorizations import is_reduced_pair, is_reduced_pair_by_roots, parabolic_decompose, three_factor
from .finite_weyl import finite_weyl_group, longest_element, psi
from .group_element import GroupElement, Word, identity, simple_reflection, translation
from .root_datum import RootDatum, parse_datum
from .type_a import TypeAWindow, element_of, window_of

__all__ = [
    "AffineKLError",
    "AffineRoot",
    "BruhatIntervals",
    "GroupElement",
    "RootDatum",
    "TypeAWindow",
    "Word",
    "bruhat_leq",
    "element_of",
    "elements_up_to_length",
    "finite_weyl_group",
    "format_element",
    "identity",
    "is_reduced_pair",
    "is_reduced_pair_by_roots",
    "longest_element",
    "parabolic_decompose",
    "parse_datum",
    "parse_element",
    "psi",
    "simple_affine_root",
    "simple_reflection",
    "three_factor",
    "translation",
    "window_of",
]
