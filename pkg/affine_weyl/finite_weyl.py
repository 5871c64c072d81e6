"""
Finite Weyl Group
Enumeration of W_f, longest elements of parabolics, the diagram automorphism d, and Psi
"""

import logging
from collections import deque
from functools import lru_cache
from typing import Iterable, Optional, Sequence, Tuple

from .affine_root import simple_affine_root
from .errors import AffineKLError, UnsupportedDatumError
from .group_element import GroupElement, identity, translation
from .lattice import Vector, vec_neg
from .root_datum import RootDatum

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def finite_weyl_group(datum: RootDatum) -> Tuple[GroupElement, ...]:
    """All of W_f in breadth-first order from the identity"""
    start = identity(datum)
    seen = {start: None}
    queue = deque([start])
    while queue:
        g = queue.popleft()
        for i in datum.finite_indices:
            h = g.left_reflect(i)
            if h not in seen:
                seen[h] = None
                queue.append(h)
    logger.debug(f"W_f of {datum.selector} has {len(seen)} elements")
    return tuple(seen)


def longest_element(datum: RootDatum, J: Optional[Iterable[int]] = None) -> GroupElement:
    """
    Longest element of the parabolic subgroup W_J.

    J defaults to the finite simple reflections 1..n. Any proper subset of 0..n
    generates a finite parabolic; the full set does not.
    """
    J = tuple(sorted(set(datum.finite_indices if J is None else J)))
    if any(i not in datum.affine_indices for i in J):
        raise ValueError(f"J = {J} is not a set of simple reflections of {datum.selector}")
    if datum.rank and len(J) == datum.rank + 1:
        raise UnsupportedDatumError("the full set of affine simple reflections generates an infinite group")
    return _longest(datum, J)


@lru_cache(maxsize=None)
def _longest(datum: RootDatum, J: Tuple[int, ...]) -> GroupElement:
    w = identity(datum)
    while True:
        ascent = next((i for i in J if not w.right_descent(i)), None)
        if ascent is None:
            return w
        w = w.right_reflect(ascent)


def d_automorphism(datum: RootDatum, i: int) -> int:
    """The index j with w_0(alpha_i) = -alpha_j"""
    image = longest_element(datum).act_on_root(simple_affine_root(datum, i))
    target = vec_neg(image.beta)
    for j in datum.finite_indices:
        if datum.simple_coroot(j) == target:
            return j
    raise AffineKLError(f"w_0 does not permute the simple roots of {datum.selector}")


def psi(x: GroupElement) -> GroupElement:
    """Projection W_a -> W_f forgetting the translation part"""
    if not x.in_affine_subgroup:
        raise AffineKLError(f"psi is defined on W_a only; {x} has a nontrivial Pi-part")
    return x.finite_part()


def pi_with_translation(datum: RootDatum, weight: Sequence[int]) -> GroupElement:
    """The unique length-zero element whose translation part is weight"""
    y = translation(datum, weight)
    for u in finite_weyl_group(datum):
        candidate = y * u
        if candidate.length == 0:
            return candidate
    raise AffineKLError(f"no length-zero element of {datum.selector} has translation {tuple(weight)}")


def length_zero_elements(datum: RootDatum) -> Tuple[GroupElement, ...]:
    """Pi, for data where it is finite; one element per fundamental-weight class"""
    if not datum.is_simply_connected:
        raise UnsupportedDatumError(f"Pi is infinite for {datum.selector}")
    found = {identity(datum): None}
    frontier = [identity(datum)]
    generators = {translation(datum, w).pi_part for w in datum.fundamental_weights}
    while frontier:
        next_frontier = []
        for p in frontier:
            for g in generators:
                q = g * p
                if q not in found:
                    found[q] = None
                    next_frontier.append(q)
        frontier = next_frontier
    return tuple(found)


def finite_weight_orbit(datum: RootDatum, weight: Vector) -> Tuple[Vector, ...]:
    """W_f-orbit of an element of Y"""
    seen = {tuple(weight): None}
    queue = deque([tuple(weight)])
    while queue:
        w = queue.popleft()
        for i in datum.finite_indices:
            pairing = sum(a * b for a, b in zip(w, datum.simple_coroot(i)))
            if pairing == 0:
                continue
            image = tuple(w[r] - pairing * datum.simple_root(i)[r] for r in range(len(w)))
            if image not in seen:
                seen[image] = None
                queue.append(image)
    return tuple(seen)
