"""
Arrow Bases
Partial canonical basis sums C<-_v and C->_v with C<-_v C_{w_0} = C_{v w_0} and C_{w_0} C->_v = C_{w_0 v}
"""

import logging
from dataclasses import dataclass
from typing import Optional

from affine_weyl.errors import KLComputationError, ReducednessError
from affine_weyl.factorizations import is_reduced_pair
from affine_weyl.finite_weyl import longest_element
from affine_weyl.group_element import GroupElement

from .hecke_element import HeckeElt
from .kl_basis import KLCache, kl_basis, kl_element

logger = logging.getLogger(__name__)

LEFT = "left"
RIGHT = "right"


@dataclass(frozen=True)
class ArrowBasisElt:
    v: GroupElement
    side: str
    elt: HeckeElt


def arrow_basis(v: GroupElement, side: str = LEFT, cache: Optional[KLCache] = None, verify: bool = True) -> ArrowBasisElt:
    """
    side="left": C<-_v = sum of P'_{x w_0, v w_0} T_x over x with x * w_0 reduced.
    side="right": C->_v = sum of P'_{w_0 x, w_0 v} T_x over x with w_0 * x reduced.
    """
    cache = KLCache() if cache is None else cache
    datum = v.datum
    w0 = longest_element(datum)
    if side == LEFT:
        if not is_reduced_pair(v, w0):
            raise ReducednessError(f"{v} * w_0 is not reduced")
        record = kl_basis(v * w0, cache)
        terms = {}
        for y, c in record.coeffs.items():
            x = y * w0
            if x.length + w0.length == y.length:
                terms[x] = c
    elif side == RIGHT:
        if not is_reduced_pair(w0, v):
            raise ReducednessError(f"w_0 * {v} is not reduced")
        record = kl_basis(w0 * v, cache)
        terms = {}
        for y, c in record.coeffs.items():
            x = w0 * y
            if x.length + w0.length == y.length:
                terms[x] = c
    else:
        raise ValueError(f"side must be '{LEFT}' or '{RIGHT}', got '{side}'")
    elt = HeckeElt(datum, terms)
    if verify:
        c_w0 = kl_element(w0, cache)
        product = elt * c_w0 if side == LEFT else c_w0 * elt
        if product != record.element():
            raise KLComputationError(f"{side} arrow basis element of {v} does not reproduce C_{record.w}")
    return ArrowBasisElt(v, side, elt)
