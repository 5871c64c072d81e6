"""
Kazhdan-Lusztig Basis
The canonical basis C_w by a triangular bar-invariance solve over the Bruhat interval [e, w]
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

from affine_weyl.bruhat import DEFAULT_LENGTH_CAP, BruhatIntervals
from affine_weyl.errors import KLComputationError
from affine_weyl.group_element import GroupElement

from .hecke_element import BarCache, HeckeElt
from .laurent import ONE, LaurentInt

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class KLRecord:
    """C_w = sum of P'_{x,w} T_x over x <= w"""
    w: GroupElement
    coeffs: Dict[GroupElement, LaurentInt] = field(hash=False)

    def p(self, x: GroupElement) -> LaurentInt:
        return self.coeffs.get(x, LaurentInt())

    def element(self) -> HeckeElt:
        return HeckeElt(self.w.datum, self.coeffs)

    def check(self, bars: Optional[BarCache] = None) -> None:
        """Raise KLComputationError unless the record is normalized and bar-invariant"""
        if self.p(self.w) != ONE:
            raise KLComputationError(f"P'_(w,w) != 1 for {self.w}")
        for x, c in self.coeffs.items():
            if x != self.w and not c.in_strictly_negative_powers():
                raise KLComputationError(f"P'_({x},{self.w}) = {c} is not in u^-1 Z[u^-1]")
        h = self.element()
        if h.bar(bars) != h:
            raise KLComputationError(f"C_{self.w} is not bar-invariant")


class KLCache:
    """
    Bruhat intervals, bar(T_x) expansions and finished KL records.

    Owned by the caller and passed explicitly; an optional store persists
    records between runs (anything with load(w) and save(record)).
    """

    def __init__(self, length_cap: int = DEFAULT_LENGTH_CAP, store=None):
        self.length_cap = length_cap
        self.intervals = BruhatIntervals(length_cap)
        self.bars = BarCache()
        self.records: Dict[GroupElement, KLRecord] = {}
        self.store = store

    def __len__(self) -> int:
        return len(self.records)

    def lookup(self, w: GroupElement) -> Optional[KLRecord]:
        record = self.records.get(w)
        if record is None and self.store is not None:
            record = self.store.load(w)
            if record is not None:
                logger.debug(f"KL record for {w} read from store")
                self.records[w] = record
        return record

    def remember(self, record: KLRecord) -> None:
        self.records[record.w] = record
        if self.store is not None:
            self.store.save(record)


def _solve(w: GroupElement, cache: KLCache) -> Dict[GroupElement, LaurentInt]:
    interval = cache.intervals.lower_interval(w)
    order = sorted(interval, key=lambda x: (-x.length, str(x)))
    coeffs: Dict[GroupElement, LaurentInt] = {}
    # running bar(sum of the P'_{y,w} T_y found so far)
    barred: Dict[GroupElement, LaurentInt] = {}
    for x in order:
        if x == w:
            p = ONE
        else:
            q = barred.get(x, LaurentInt())
            p = q.negative_part()
            if q.constant_term() != 0 or q - p != -p.bar():
                raise KLComputationError(f"bar-invariance defect at {x} below {w} is not antisymmetric: {q}")
        if not p:
            continue
        coeffs[x] = p
        pbar = p.bar()
        for y, c in cache.bars.bar_of_T(x).items():
            total = barred.get(y)
            barred[y] = pbar * c if total is None else total + pbar * c
    logger.debug(f"KL solve for {w}: interval {len(interval)}, support {len(coeffs)}")
    return coeffs


def kl_basis(w: GroupElement, cache: Optional[KLCache] = None) -> KLRecord:
    """The canonical basis element C_w; C_{pi v} = T_pi C_v for pi of length zero"""
    cache = KLCache() if cache is None else cache
    record = cache.lookup(w)
    if record is not None:
        return record
    pi = w.pi_part
    if pi.is_identity:
        record = KLRecord(w, _solve(w, cache))
    else:
        inner = kl_basis(pi.inverse() * w, cache)
        record = KLRecord(w, {pi * x: c for x, c in inner.coeffs.items()})
    cache.remember(record)
    return record


def kl_element(w: GroupElement, cache: Optional[KLCache] = None) -> HeckeElt:
    return kl_basis(w, cache).element()


def lattice_check(h: HeckeElt) -> Tuple[bool, Optional[HeckeElt]]:
    """(True, h mod u^-1 L) if every coefficient lies in Z[u^-1], else (False, None)"""
    if not all(c.in_negative_powers() for _, c in h.items()):
        return False, None
    leading = HeckeElt(h.datum, ((x, c.constant_term()) for x, c in h.items()))
    return True, leading
