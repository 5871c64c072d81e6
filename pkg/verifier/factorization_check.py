"""
Factorization Check
Compares C_w with chi_lambda(Y) C<-_{v1} C_{w_0} C->_{v2} for w in the lowest cell, and C_{v1 w_0 v2} with C<-_{v1} C_{w_0} C->_{v2}
"""

import logging
import time
from dataclasses import dataclass
from typing import Any, Dict, List, Optional

from affine_weyl.element_grammar import format_element
from affine_weyl.errors import AffineKLError, CapExceededError
from affine_weyl.finite_weyl import longest_element
from affine_weyl.group_element import GroupElement
from affine_weyl.lattice import Vector
from bernstein_characters.bernstein import chi
from bernstein_characters.multiplicities import DEFAULT_DIMENSION_CAP
from bernstein_characters.weights import Weight
from hecke_algebra.arrow_basis import LEFT, RIGHT, arrow_basis
from hecke_algebra.hecke_element import HeckeElt
from hecke_algebra.kl_basis import KLCache, kl_element
from hecke_algebra.serialization import digest, hecke_to_dict
from primitive_cells.lowest_cell import CellFactorization, lowest_cell_factorize
from primitive_cells.primitive_elements import is_primitive

logger = logging.getLogger(__name__)

STATUS_MATCH = "match"
STATUS_MISMATCH = "mismatch"
STATUS_SKIPPED = "skipped"


@dataclass(frozen=True)
class VerificationReport:
    datum: str
    w: str
    v1: str
    lam: List[int]
    v2: str
    status: str
    lhs_digest: Optional[str] = None
    rhs_digest: Optional[str] = None
    difference: Optional[Dict[str, Any]] = None
    reason: Optional[str] = None
    timing_ms: Optional[float] = None

    @property
    def matched(self) -> bool:
        return self.status == STATUS_MATCH

    def to_dict(self) -> Dict[str, Any]:
        return {
            "datum": self.datum,
            "w": self.w,
            "factorization": {"v1": self.v1, "lambda": self.lam, "v2": self.v2},
            "status": self.status,
            "lhs_digest": self.lhs_digest,
            "rhs_digest": self.rhs_digest,
            "difference": self.difference,
            "reason": self.reason,
            "timing_ms": self.timing_ms,
        }


def _compare(w: GroupElement, v1: GroupElement, lam: Vector, v2: GroupElement,
             lhs: HeckeElt, rhs: HeckeElt, started: Optional[float]) -> VerificationReport:
    difference = lhs - rhs
    status = STATUS_MATCH if difference.is_zero() else STATUS_MISMATCH
    if status == STATUS_MISMATCH:
        logger.warning(f"Factorization of C_{w} FAILS: difference has {len(difference)} terms")
    return VerificationReport(
        datum=w.datum.selector,
        w=format_element(w),
        v1=format_element(v1),
        lam=list(w.datum.pairings(lam)),
        v2=format_element(v2),
        status=status,
        lhs_digest=digest(lhs),
        rhs_digest=digest(rhs),
        difference=None if status == STATUS_MATCH else hecke_to_dict(difference),
        timing_ms=_elapsed(started),
    )


def _elapsed(started: Optional[float]) -> Optional[float]:
    if started is None:
        return None
    return round((time.perf_counter() - started) * 1000.0, 3)


def _skipped(w: GroupElement, cf: Optional[CellFactorization], reason: str, started: Optional[float]) -> VerificationReport:
    logger.warning(f"Skipping {w}: {reason}")
    return VerificationReport(
        datum=w.datum.selector,
        w=format_element(w),
        v1=format_element(cf.v1) if cf else "",
        lam=list(w.datum.pairings(cf.lam)) if cf else [],
        v2=format_element(cf.v2) if cf else "",
        status=STATUS_SKIPPED,
        reason=reason,
        timing_ms=_elapsed(started),
    )


def verify_factorization(w: GroupElement, cache: Optional[KLCache] = None, record_timings: bool = False,
                         dimension_cap: int = DEFAULT_DIMENSION_CAP,
                         factorization: Optional[CellFactorization] = None) -> VerificationReport:
    """C_w against chi_lam(Y) C<-_{v1} C_{w_0} C->_{v2} for the cell factorization of w"""
    cache = KLCache() if cache is None else cache
    started = time.perf_counter() if record_timings else None
    cf = factorization if factorization is not None else lowest_cell_factorize(w)
    if cf is None:
        raise AffineKLError(f"{w} is not in the lowest two-sided cell")
    datum = w.datum
    try:
        lhs = kl_element(w, cache)
        left = arrow_basis(cf.v1, LEFT, cache).elt
        right = arrow_basis(cf.v2, RIGHT, cache).elt
        character = chi(Weight.from_y(datum, cf.lam), dimension_cap)
        rhs = character * left * kl_element(longest_element(datum), cache) * right
    except CapExceededError as e:
        return _skipped(w, cf, str(e), started)
    return _compare(w, cf.v1, cf.lam, cf.v2, lhs, rhs, started)


def verify_main_theorem(v1: GroupElement, v2: GroupElement, cache: Optional[KLCache] = None,
                        record_timings: bool = False) -> VerificationReport:
    """C_{v1 w_0 v2} against C<-_{v1} C_{w_0} C->_{v2} for primitive v1 and w_0 * v2 reduced"""
    if not is_primitive(v1):
        raise AffineKLError(f"{v1} is not primitive")
    cache = KLCache() if cache is None else cache
    started = time.perf_counter() if record_timings else None
    datum = v1.datum
    w0 = longest_element(datum)
    w = v1 * w0 * v2
    zero = tuple(0 for _ in range(datum.lattice_dim))
    cf = CellFactorization(w=w, v1=v1, lam=zero, v2=v2)
    try:
        lhs = kl_element(w, cache)
        rhs = arrow_basis(v1, LEFT, cache).elt * kl_element(w0, cache) * arrow_basis(v2, RIGHT, cache).elt
    except CapExceededError as e:
        return _skipped(w, cf, str(e), started)
    return _compare(w, v1, zero, v2, lhs, rhs, started)
