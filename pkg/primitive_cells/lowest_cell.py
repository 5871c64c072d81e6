"""
Lowest Two-Sided Cell
Membership in W_(nu) and the unique factorization w = v1 * w_0 y^lam * v2
"""

import logging
from dataclasses import dataclass, replace
from typing import Optional

from affine_weyl.factorizations import three_factor
from affine_weyl.finite_weyl import longest_element
from affine_weyl.group_element import GroupElement, translation
from affine_weyl.lattice import Vector, mat_vec, vec_neg

from .boxes import box_of
from .primitive_elements import is_primitive

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CellFactorization:
    """w = v1 * w_0 y^lam * v2 with v1 and v2^{-1} primitive and lam dominant"""
    w: GroupElement
    v1: GroupElement
    lam: Vector
    v2: GroupElement

    def middle(self) -> GroupElement:
        return longest_element(self.w.datum) * translation(self.w.datum, self.lam)

    def reassemble(self) -> GroupElement:
        return self.v1 * self.middle() * self.v2

    def is_valid(self) -> bool:
        return is_valid_cell_factorization(self)

    def with_changes(self, **changes) -> "CellFactorization":
        return replace(self, **changes)


def is_dominant(datum, weight: Vector) -> bool:
    return all(c >= 0 for c in datum.pairings(weight))


def is_valid_cell_factorization(cf: CellFactorization) -> bool:
    """Reassembly, dominance, primitivity and both reduced forms v1 * w_0 y^lam * v2 and v1 * y^{w_0 lam} w_0 * v2"""
    datum = cf.w.datum
    if cf.reassemble() != cf.w:
        return False
    if not is_dominant(datum, cf.lam):
        return False
    if not (is_primitive(cf.v1) and is_primitive(cf.v2.inverse())):
        return False
    w0 = longest_element(datum)
    y_lam = translation(datum, cf.lam)
    y_w0_lam = translation(datum, mat_vec(w0.fin, cf.lam))
    middle = cf.middle()
    if middle.length != w0.length + y_lam.length or middle.length != y_w0_lam.length + w0.length:
        return False
    return cf.v1.length + middle.length + cf.v2.length == cf.w.length


def _right_primitive_part(g: GroupElement) -> GroupElement:
    """y^{-eta} z for z minimal in W_f g and z(A_0) in B_eta"""
    u, beta, v = three_factor(g)
    z = translation(g.datum, beta) * v
    eta = box_of(z)
    return translation(g.datum, vec_neg(eta)) * z


def lowest_cell_factorize(w: GroupElement) -> Optional[CellFactorization]:
    """The factorization of w if w lies in the lowest two-sided cell, otherwise None"""
    datum = w.datum
    datum.require_simply_connected("lowest_cell_factorize")
    v2 = _right_primitive_part(w)
    v1 = _right_primitive_part(w.inverse()).inverse()
    w0 = longest_element(datum)
    m = v1.inverse() * w * v2.inverse()
    if m.fin != w0.fin:
        logger.debug(f"{w} is not in the lowest cell: middle factor has finite part {m.finite_part()}")
        return None
    lam = mat_vec(w0.fin, m.trans)
    candidate = CellFactorization(w=w, v1=v1, lam=lam, v2=v2)
    if not is_valid_cell_factorization(candidate):
        logger.debug(f"{w} is not in the lowest cell")
        return None
    return candidate
