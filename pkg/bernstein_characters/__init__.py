"""
Bernstein Characters
Bernstein generators, Weyl characters and the Lusztig factorization of C_{w_0 y^lambda}
"""

from .bernstein import bernstein_relations_check, chi, verify_lusztig, y_element
from .multiplicities import (
    CharacterPoly,
    kostka_multiplicities,
    kostka_number,
    tensor_product_decomposition,
    weight_multiplicities,
    weyl_dimension,
)
from .weights import Weight, weyl_orbit

__all__ = [
    "CharacterPoly",
    "Weight",
    "bernstein_relations_check",
    "chi",
    "kostka_multiplicities",
    "kostka_number",
    "tensor_product_decomposition",
    "verify_lusztig",
    "weight_multiplicities",
    "weyl_dimension",
    "weyl_orbit",
    "y_element",
]
