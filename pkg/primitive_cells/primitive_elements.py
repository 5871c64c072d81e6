"""
Primitive Elements
The four equivalent primitivity tests, the bijection with W_f, enumeration and the published-style table
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import pandas as pd

from affine_weyl.affine_root import simple_affine_root
from affine_weyl.errors import AffineKLError
from affine_weyl.finite_weyl import finite_weyl_group, longest_element
from affine_weyl.group_element import GroupElement, Word, translation
from affine_weyl.lattice import Vector, mat_vec
from affine_weyl.root_datum import RootDatum
from affine_weyl.type_a import TypeAWindow, pi_lift, window_of

from .boxes import box_of

logger = logging.getLogger(__name__)

CRITERION_GEOMETRIC = "geometric"
CRITERION_ROOT = "root"
CRITERION_FACTORED = "factored"
CRITERION_WORD = "word"


@dataclass(frozen=True)
class PrimitiveCertificate:
    """w = v * y^lam * w_0 with J = R(v) and lam = sum of varpi_i over i not in J"""
    w: GroupElement
    v: GroupElement
    J: Tuple[int, ...]
    lam: Vector
    criterion_used: str = CRITERION_FACTORED

    def reassemble(self) -> GroupElement:
        return self.v * translation(self.w.datum, self.lam) * longest_element(self.w.datum)

    @property
    def lam_fundamental(self) -> Vector:
        """lam in fundamental-weight coordinates"""
        return tuple(0 if i in self.J else 1 for i in self.w.datum.finite_indices)


def descent_weight(datum: RootDatum, J: Sequence[int]) -> Vector:
    return datum.from_fundamental([0 if i in J else 1 for i in datum.finite_indices])


def is_primitive(w: GroupElement) -> bool:
    """w(alpha_i) is a positive finite root or a negative finite root plus delta, for every i in 1..n"""
    w.datum.require_simply_connected("is_primitive")
    for i in w.datum.finite_indices:
        image = w.act_on_root(simple_affine_root(w.datum, i))
        positive = w.datum.is_positive_coroot(image.beta)
        if not ((image.k == 0 and positive) or (image.k == 1 and not positive)):
            return False
    return True


def is_primitive_geometric(w: GroupElement) -> bool:
    """w^{-1}(A_0) lies in B_0"""
    return not any(box_of(w.inverse()))


def is_primitive_factored(w: GroupElement) -> bool:
    """w = v * y^lam * w_0 with lam determined by the right descents of v"""
    w.datum.require_simply_connected("is_primitive_factored")
    w0 = longest_element(w.datum)
    v = w.finite_part() * w0
    J = v.right_descents
    return w.trans == mat_vec(v.fin, descent_weight(w.datum, J))


def is_primitive_word(window: Sequence[int], n: Optional[int] = None) -> bool:
    """1 <= x_{i+1} - x_i <= n for the n-1 consecutive differences of an SL_n window"""
    entries = window.entries if isinstance(window, TypeAWindow) else tuple(window)
    n = len(entries) if n is None else n
    if len(entries) != n:
        raise ValueError(f"window of length {len(entries)} is not an SL_{n} window")
    return all(1 <= entries[i + 1] - entries[i] <= n for i in range(n - 1))


def primitive_from_finite(v: GroupElement) -> PrimitiveCertificate:
    datum = v.datum
    datum.require_simply_connected("primitive_from_finite")
    if not v.is_finite:
        raise AffineKLError(f"{v} is not in W_f")
    J = tuple(i for i in v.right_descents if i != 0)
    lam = descent_weight(datum, J)
    w = v * translation(datum, lam) * longest_element(datum)
    return PrimitiveCertificate(w=w, v=v, J=J, lam=lam)


def finite_from_primitive(w: GroupElement) -> PrimitiveCertificate:
    """Inverse of primitive_from_finite"""
    w.datum.require_simply_connected("finite_from_primitive")
    v = w.finite_part() * longest_element(w.datum)
    certificate = primitive_from_finite(v)
    if certificate.w != w:
        raise AffineKLError(f"{w} is not primitive")
    return certificate


def _sort_key(w: GroupElement):
    if w.datum.is_type_a:
        return (w.length, window_of(w).entries)
    return (w.length, str(w))


def enumerate_primitive(datum: RootDatum) -> List[GroupElement]:
    """All |W_f| primitive elements, sorted by (length, window)"""
    datum.require_simply_connected("enumerate_primitive")
    found = [primitive_from_finite(v).w for v in finite_weyl_group(datum)]
    found.sort(key=_sort_key)
    logger.debug(f"{len(found)} primitive elements in {datum.selector}")
    return found


def primitive_table(datum: RootDatum, group_by_pi: bool = False) -> pd.DataFrame:
    """
    One row per primitive element.

    For type A the window is the one with 1 <= w_1 <= n and pi_lift is the
    exponent read from it; lifted_word writes the element with that
    unreduced exponent, the way the elements are usually tabulated.
    """
    rows = []
    for w in enumerate_primitive(datum):
        word = w.reduced_word()
        row = {"word": word.format(), "length": w.length}
        if datum.is_type_a:
            window = window_of(w)
            lift = pi_lift(window)
            letters = (w.pi_part.inverse() * w).reduced_word().letters
            row["lifted_word"] = Word(letters, pi_exp=lift).format()
            row["window"] = str(window)
            row["pi_lift"] = lift
        rows.append(row)
    table = pd.DataFrame(rows)
    if group_by_pi and "pi_lift" in table.columns:
        table = table.sort_values("pi_lift", kind="stable").reset_index(drop=True)
    return table
