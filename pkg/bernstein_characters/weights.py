"""
Weights
Elements of Y in fundamental-weight coordinates, the invariant form and the Weyl group action on them
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Sequence, Tuple

import sympy

from affine_weyl.errors import AffineKLError
from affine_weyl.finite_weyl import finite_weight_orbit
from affine_weyl.lattice import Vector
from affine_weyl.root_datum import RootDatum
from affine_weyl.type_a import epsilon_coordinates


@dataclass(frozen=True)
class Weight:
    """lambda = sum c_i varpi_i; the datum must be simply connected so these coordinates cover Y"""
    datum: RootDatum
    coords: Tuple[int, ...]

    def __post_init__(self):
        self.datum.require_simply_connected("Weight")
        if len(self.coords) != self.datum.rank:
            raise AffineKLError(f"{self.datum.selector} weights have {self.datum.rank} coordinates, got {len(self.coords)}")
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))

    @classmethod
    def from_y(cls, datum: RootDatum, y: Sequence[int]) -> "Weight":
        return cls(datum, datum.pairings(y))

    @classmethod
    def zero(cls, datum: RootDatum) -> "Weight":
        return cls(datum, (0,) * datum.rank)

    @classmethod
    def rho(cls, datum: RootDatum) -> "Weight":
        return cls(datum, (1,) * datum.rank)

    @property
    def y(self) -> Vector:
        """Coordinates in the Y basis of the datum"""
        return self.datum.from_fundamental(self.coords)

    def epsilon(self) -> Vector:
        """Type A only: eps-coordinates of the lift with last coordinate 0"""
        return epsilon_coordinates(self.datum, self.y)

    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.coords)

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(self.datum, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(self.datum, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Weight":
        return Weight(self.datum, tuple(-a for a in self.coords))

    def scaled(self, k: int) -> "Weight":
        return Weight(self.datum, tuple(k * a for a in self.coords))

    def reflect(self, i: int) -> "Weight":
        """s_i(lambda) = lambda - <lambda, alpha_i> alpha_i"""
        c = self.coords[i - 1]
        root = simple_root_coords(self.datum, i)
        return Weight(self.datum, tuple(a - c * r for a, r in zip(self.coords, root)))

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.coords) + ")"


def simple_root_coords(datum: RootDatum, j: int) -> Tuple[int, ...]:
    """alpha_j in fundamental-weight coordinates: column j of the Cartan matrix"""
    return tuple(datum.cartan[i][j - 1] for i in range(datum.rank))


@lru_cache(maxsize=None)
def positive_root_coords(datum: RootDatum) -> Tuple[Tuple[Tuple[int, ...], Tuple[int, ...]], ...]:
    """(root in fundamental-weight coordinates, root in simple-root coordinates) for each positive root"""
    result = []
    for coroot in datum.positive_coroots:
        root_y = datum.coroot_roots[coroot]
        result.append((datum.pairings(root_y), datum.coroot_coordinates[coroot]))
    return tuple(result)


@lru_cache(maxsize=None)
def inverse_cartan(datum: RootDatum) -> Tuple[Tuple[Fraction, ...], ...]:
    inverse = sympy.Matrix(datum.cartan).inv()
    return tuple(
        tuple(Fraction(int(sympy.fraction(x)[0]), int(sympy.fraction(x)[1])) for x in inverse.row(i))
        for i in range(datum.rank)
    )


def inner_product(datum: RootDatum, a: Sequence[int], b: Sequence[int]) -> Fraction:
    """
    W_f-invariant form on fundamental-weight coordinates.

    Normalized by (alpha_i | alpha_i) = 2 d_i for the symmetrizer d, so
    (varpi_i | alpha_j) = delta_ij d_j.
    """
    inverse = inverse_cartan(datum)
    d = datum.symmetrizer
    n = datum.rank
    root_coords = [sum(inverse[j][k] * a[k] for k in range(n)) for j in range(n)]
    return sum(root_coords[j] * d[j] * b[j] for j in range(n))


def weyl_orbit(weight: Weight) -> List[Weight]:
    return [Weight.from_y(weight.datum, y) for y in finite_weight_orbit(weight.datum, weight.y)]


def dominant_conjugate(weight: Weight) -> Tuple[Weight, int]:
    """(dominant element of the orbit, number of simple reflections used)"""
    steps = 0
    while True:
        i = next((i for i, c in enumerate(weight.coords, start=1) if c < 0), None)
        if i is None:
            return weight, steps
        weight = weight.reflect(i)
        steps += 1
