"""
Primitive Cells
Primitive elements of W_e and the lowest two-sided cell
"""

from .boxes import alcove_barycenter, box_of
from .lowest_cell import CellFactorization, lowest_cell_factorize
from .primitive_elements import (
    PrimitiveCertificate,
    enumerate_primitive,
    finite_from_primitive,
    is_primitive,
    is_primitive_factored,
    is_primitive_geometric,
    is_primitive_word,
    primitive_from_finite,
    primitive_table,
)

__all__ = [
    "CellFactorization",
    "PrimitiveCertificate",
    "alcove_barycenter",
    "box_of",
    "enumerate_primitive",
    "finite_from_primitive",
    "is_primitive",
    "is_primitive_factored",
    "is_primitive_geometric",
    "is_primitive_word",
    "lowest_cell_factorize",
    "primitive_from_finite",
    "primitive_table",
]
