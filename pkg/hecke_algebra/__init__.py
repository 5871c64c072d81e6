"""
Hecke Algebra
T-basis arithmetic, bar involution and Kazhdan-Lusztig bases of H(W_e)
"""

from .arrow_basis import ArrowBasisElt, arrow_basis
from .hecke_element import BarCache, HeckeElt, T, bar, t_inverse, t_multiply
from .kl_basis import KLCache, KLRecord, kl_basis, kl_element, lattice_check
from .laurent import ONE, U, XI, LaurentInt
from .structure_coefficients import structure_coeff, structure_coeffs_by_subsets, xi_form

__all__ = [
    "ArrowBasisElt",
    "BarCache",
    "HeckeElt",
    "KLCache",
    "KLRecord",
    "LaurentInt",
    "ONE",
    "T",
    "U",
    "XI",
    "arrow_basis",
    "bar",
    "kl_basis",
    "kl_element",
    "lattice_check",
    "structure_coeff",
    "structure_coeffs_by_subsets",
    "t_inverse",
    "t_multiply",
    "xi_form",
]
