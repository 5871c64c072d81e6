"""
Reduced Factorizations
Reducedness tests, parabolic coset decompositions and the factorization w = u * y^beta v
"""

from typing import Iterable, Tuple

from .group_element import GroupElement, translation
from .lattice import Vector


def is_reduced_pair(x: GroupElement, y: GroupElement) -> bool:
    """l(xy) = l(x) + l(y)"""
    return (x * y).length == x.length + y.length


def is_reduced_pair_by_roots(x: GroupElement, y: GroupElement) -> bool:
    """x(y(R_+) cap R_-) lies in R_-, checked over the inversion set of y"""
    for root in y.inversion_set():
        if x.act_on_root(y.act_on_root(root)).is_positive(x.datum):
            return False
    return True


def _strip(w: GroupElement, J: Tuple[int, ...], left: bool) -> GroupElement:
    while True:
        descent = next((i for i in J if (w.left_descent(i) if left else w.right_descent(i))), None)
        if descent is None:
            return w
        w = w.left_reflect(descent) if left else w.right_reflect(descent)


def parabolic_decompose(w: GroupElement, J: Iterable[int], side: str = "right") -> Tuple[GroupElement, GroupElement]:
    """
    Minimal coset representative factorization.

    side="right": (w^J, w_J) with w = w^J * w_J, w_J in W_J, w^J minimal in w W_J.
    side="left":  (_J w, ^J w) with w = _J w * ^J w, _J w in W_J, ^J w minimal in W_J w.
    """
    J = tuple(sorted(set(J)))
    if any(i not in w.datum.affine_indices for i in J):
        raise ValueError(f"J = {J} is not a set of simple reflections of {w.datum.selector}")
    if side == "right":
        minimal = _strip(w, J, left=False)
        return minimal, minimal.inverse() * w
    if side == "left":
        minimal = _strip(w, J, left=True)
        return w * minimal.inverse(), minimal
    raise ValueError(f"side must be 'left' or 'right', got '{side}'")


def minimal_in_finite_coset(w: GroupElement) -> Tuple[GroupElement, GroupElement]:
    """(u, z) with w = u * z, u in W_f and z minimal in W_f w"""
    return parabolic_decompose(w, w.datum.finite_indices, side="left")


def three_factor(w: GroupElement) -> Tuple[GroupElement, Vector, GroupElement]:
    """(u, beta, v) with w = u * y^beta v, y^beta v minimal in W_f w and beta dominant"""
    u, z = minimal_in_finite_coset(w)
    return u, z.trans, z.finite_part()


def reassemble(u: GroupElement, beta: Vector, v: GroupElement) -> GroupElement:
    return u * translation(u.datum, beta) * v
