"""
Bernstein Elements
Y^lambda = T_{y^mu} T_{y^nu}^{-1}, Weyl characters chi_lambda(Y) and the check C_{w_0 y^lambda} = chi_lambda(Y) C_{w_0}
"""

import logging
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from affine_weyl.finite_weyl import longest_element
from affine_weyl.group_element import simple_reflection, translation
from affine_weyl.lattice import Vector, vec_add
from affine_weyl.root_datum import RootDatum
from hecke_algebra.hecke_element import HeckeElt, T, t_inverse
from hecke_algebra.kl_basis import KLCache, kl_element

from .multiplicities import DEFAULT_DIMENSION_CAP, weight_multiplicities
from .weights import Weight

logger = logging.getLogger(__name__)


def dominant_decomposition(datum: RootDatum, lam: Sequence[int]) -> Tuple[Vector, Vector]:
    """(mu, nu) dominant with lam = mu - nu, nu = sum of max(0, -<lam, alpha_i>) varpi_i"""
    nu = datum.from_fundamental([max(0, -c) for c in datum.pairings(lam)])
    return vec_add(lam, nu), nu


def y_element_from(datum: RootDatum, mu: Sequence[int], nu: Sequence[int]) -> HeckeElt:
    """T_{y^mu} T_{y^nu}^{-1} for dominant mu and nu"""
    for weight in (mu, nu):
        if any(c < 0 for c in datum.pairings(weight)):
            raise ValueError(f"{tuple(weight)} is not dominant")
    return T(translation(datum, mu)) * t_inverse(translation(datum, nu))


def y_element(datum: RootDatum, lam: Sequence[int]) -> HeckeElt:
    """Y^lam for lam in Y (Y-basis coordinates)"""
    mu, nu = dominant_decomposition(datum, lam)
    return y_element_from(datum, mu, nu)


def bernstein_relations_check(datum: RootDatum, i: int, lam: Sequence[int]) -> bool:
    """
    <lam, alpha_i> = 0: T_i Y^lam = Y^lam T_i.
    <lam, alpha_i> = 1: T_i^{-1} Y^lam T_i^{-1} = Y^{s_i lam}.
    """
    pairing = datum.pairings(lam)[i - 1]
    s = simple_reflection(datum, i)
    y = y_element(datum, lam)
    if pairing == 0:
        return T(s) * y == y * T(s)
    if pairing == 1:
        reflected = tuple(a - pairing * r for a, r in zip(lam, datum.simple_root(i)))
        inverse = t_inverse(s)
        return inverse * y * inverse == y_element(datum, reflected)
    raise ValueError(f"no Bernstein relation for pairing {pairing} of {tuple(lam)} with alpha_{i}")


def chi(lam: Weight, dimension_cap: int = DEFAULT_DIMENSION_CAP) -> HeckeElt:
    """chi_lam(Y) = sum of d_{mu,lam} Y^mu"""
    datum = lam.datum
    result = HeckeElt.zero(datum)
    for mu, m in weight_multiplicities(lam, dimension_cap).weights.items():
        result = result + y_element(datum, Weight(datum, mu).y).scale(m)
    return result


@dataclass(frozen=True)
class LusztigCheck:
    lam: Weight
    kl_side: HeckeElt
    left_side: HeckeElt
    right_side: HeckeElt

    @property
    def holds(self) -> bool:
        return self.kl_side == self.left_side == self.right_side


def lusztig_sides(lam: Weight, cache: Optional[KLCache] = None, dimension_cap: int = DEFAULT_DIMENSION_CAP) -> LusztigCheck:
    """C_{w_0 y^lam}, chi_lam(Y) C_{w_0} and C_{w_0} chi_lam(Y), computed independently"""
    datum = lam.datum
    cache = KLCache() if cache is None else cache
    w0 = longest_element(datum)
    character = chi(lam, dimension_cap)
    c_w0 = kl_element(w0, cache)
    kl_side = kl_element(w0 * translation(datum, lam.y), cache)
    return LusztigCheck(lam, kl_side, character * c_w0, c_w0 * character)


def verify_lusztig(lam: Weight, cache: Optional[KLCache] = None, dimension_cap: int = DEFAULT_DIMENSION_CAP) -> bool:
    check = lusztig_sides(lam, cache, dimension_cap)
    logger.debug(f"Lusztig factorization for lambda = {lam}: {'holds' if check.holds else 'FAILS'}")
    return check.holds
