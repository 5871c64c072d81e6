"""
Structure Coefficients
f_{w1,w2,w3} with T_{w1} T_{w2} = sum f_{w1,w2,w3} T_{w3}, rewritten as polynomials in xi = u - u^-1
"""

from typing import Dict, Optional

from affine_weyl.group_element import GroupElement

from .hecke_element import T, t_multiply
from .laurent import XI, LaurentInt

XiForm = Dict[int, int]


def structure_coeff(w1: GroupElement, w2: GroupElement, w3: GroupElement) -> LaurentInt:
    return t_multiply(T(w1), T(w2)).coefficient(w3)


def xi_structure_coeffs(w1: GroupElement, w2: GroupElement) -> Dict[GroupElement, XiForm]:
    """
    Subset expansion of T_{w1} T_{w2}.

    With w2 = pi s_{i1} ... s_{il} reduced, every subset A of the letters whose
    omitted letters are right descents at the moment they are skipped
    contributes xi^(l - |A|) to the coefficient of w1 pi prod_{j in A} s_{ij}.
    """
    word = w2.reduced_word()
    start = w1 * w2.pi_part
    letters = word.letters
    result: Dict[GroupElement, XiForm] = {}

    def expand(z: GroupElement, j: int, skipped: int) -> None:
        if j == len(letters):
            form = result.setdefault(z, {})
            form[skipped] = form.get(skipped, 0) + 1
            return
        i = letters[j]
        expand(z.right_reflect(i), j + 1, skipped)
        if z.right_descent(i):
            expand(z, j + 1, skipped + 1)

    expand(start, 0, 0)
    return result


def structure_coeffs_by_subsets(w1: GroupElement, w2: GroupElement) -> Dict[GroupElement, LaurentInt]:
    return {z: xi_to_laurent(form) for z, form in xi_structure_coeffs(w1, w2).items()}


def xi_to_laurent(form: XiForm) -> LaurentInt:
    total = LaurentInt()
    for d, c in form.items():
        total = total + (XI ** d) * c
    return total


def xi_form(p: LaurentInt) -> Optional[XiForm]:
    """p as a polynomial in xi, or None when p is not one"""
    form: XiForm = {}
    while p:
        d = p.degree
        if d < 0:
            return None
        c = p.coefficient(d)
        form[d] = c
        p = p - (XI ** d) * c
    return form


def xi_degree(form: XiForm) -> int:
    return max(form) if form else 0


def is_positive_xi_polynomial(p: LaurentInt) -> bool:
    """p is a polynomial in xi with non-negative coefficients and the same degree in xi as in u"""
    form = xi_form(p)
    if form is None or any(c < 0 for c in form.values()):
        return False
    return not p or xi_degree(form) == p.degree
