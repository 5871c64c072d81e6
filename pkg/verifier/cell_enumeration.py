"""
Cell Enumeration
The lowest two-sided cell up to a length bound, built from (v1, lambda, v2) triples, and a brute-force oracle
"""

import logging
from itertools import product
from typing import Dict, List, Optional

from affine_weyl.bruhat import elements_up_to_length
from affine_weyl.errors import AffineKLError
from affine_weyl.factorizations import is_reduced_pair
from affine_weyl.finite_weyl import longest_element
from affine_weyl.group_element import GroupElement, translation
from affine_weyl.root_datum import RootDatum
from primitive_cells.lowest_cell import CellFactorization
from primitive_cells.primitive_elements import enumerate_primitive

logger = logging.getLogger(__name__)


def _sort_key(cf: CellFactorization):
    return (cf.w.length, str(cf.w))


def enumerate_lowest_cell(datum: RootDatum, max_len: int, max_coord: Optional[int] = None) -> List[CellFactorization]:
    """
    Every w in W_(nu) with l(w) <= max_len together with its factorization,
    sorted by (length, canonical string).

    max_coord additionally bounds the fundamental-weight coordinates of lambda.
    """
    datum.require_simply_connected("enumerate_lowest_cell")
    w0 = longest_element(datum)
    budget = max_len - w0.length
    if budget < 0:
        return []

    primitive = enumerate_primitive(datum)
    fundamental_lengths = [translation(datum, varpi).length for varpi in datum.fundamental_weights]
    bounds = [budget // l if l else 0 for l in fundamental_lengths]
    if max_coord is not None:
        bounds = [min(b, max_coord) for b in bounds]

    found: Dict[GroupElement, CellFactorization] = {}
    for coords in product(*(range(b + 1) for b in bounds)):
        lam_length = sum(c * l for c, l in zip(coords, fundamental_lengths))
        if lam_length > budget:
            continue
        lam = datum.from_fundamental(coords)
        middle = w0 * translation(datum, lam)
        for v1 in primitive:
            if v1.length + lam_length > budget:
                continue
            left = v1 * middle
            for p in primitive:
                if v1.length + lam_length + p.length > budget:
                    continue
                v2 = p.inverse()
                w = left * v2
                if w in found:
                    raise AffineKLError(f"{w} arises from two triples: {found[w]} and ({v1}, {lam}, {v2})")
                found[w] = CellFactorization(w=w, v1=v1, lam=lam, v2=v2)
    result = sorted(found.values(), key=_sort_key)
    logger.info(f"{len(result)} elements of the lowest cell of {datum.selector} with length <= {max_len}")
    return result


def has_w0_witness(w: GroupElement, candidates: List[GroupElement]) -> bool:
    """Some x among candidates gives a reduced factorization w = x * w_0 * z"""
    w0 = longest_element(w.datum)
    for x in candidates:
        if x.length + w0.length > w.length:
            continue
        z = w0.inverse() * x.inverse() * w
        if x.length + w0.length + z.length == w.length and is_reduced_pair(x, w0):
            return True
    return False


def brute_force_lowest_cell(datum: RootDatum, max_len: int) -> List[GroupElement]:
    """All w of length <= max_len admitting a reduced x * w_0 * z, by exhaustive search"""
    w0 = longest_element(datum)
    everything = elements_up_to_length(datum, max_len)
    candidates = [x for x in everything if x.length <= max_len - w0.length]
    members = [w for w in everything if w.length >= w0.length and has_w0_witness(w, candidates)]
    members.sort(key=lambda w: (w.length, str(w)))
    return members
