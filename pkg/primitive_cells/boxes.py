"""
Alcoves and Boxes
Exact sample points of the basic alcove and the box B_lambda containing the image of an alcove
"""

import math
from fractions import Fraction
from functools import lru_cache
from typing import Tuple

from affine_weyl.group_element import GroupElement
from affine_weyl.lattice import Vector, dot
from affine_weyl.root_datum import RootDatum


@lru_cache(maxsize=None)
def alcove_barycenter(datum: RootDatum) -> Tuple[Fraction, ...]:
    """
    Barycenter of the basic alcove A_0 in Y tensor Q.

    The vertices of A_0 are 0 and varpi_i / a_i, where theta = sum a_i alpha_i.
    """
    m = datum.lattice_dim
    if datum.rank == 0:
        return tuple(Fraction(0) for _ in range(m))
    coefficients = datum.coroot_coordinates[datum.highest_coroot]
    denominator = datum.rank + 1
    point = [Fraction(0)] * m
    for i, a in enumerate(coefficients):
        weight = datum.fundamental_weights[i]
        for r in range(m):
            point[r] += Fraction(weight[r], denominator * a)
    return tuple(point)


def box_coordinates(datum: RootDatum, point) -> Vector:
    """floor(<point, alpha_i>) for i in 1..n"""
    return tuple(math.floor(dot(point, datum.simple_coroot(i))) for i in datum.finite_indices)


def box_of(w: GroupElement) -> Vector:
    """The lambda in Y with w(A_0) inside B_lambda = y^lambda(B_0)"""
    datum = w.datum
    datum.require_simply_connected("box_of")
    image = w.act_on_point(alcove_barycenter(datum))
    return datum.from_fundamental(box_coordinates(datum, image))


def in_dominant_chamber(w: GroupElement) -> bool:
    """w(A_0) lies in the dominant Weyl chamber, i.e. w is minimal in W_f w"""
    image = w.act_on_point(alcove_barycenter(w.datum))
    return all(dot(image, w.datum.simple_coroot(i)) > 0 for i in w.datum.finite_indices)
