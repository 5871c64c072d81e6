"""
Affine Roots
Roots beta + k*delta of the affine system, with beta a finite coroot
"""

from dataclasses import dataclass
from typing import List

from .lattice import Vector, vec_neg
from .root_datum import RootDatum


@dataclass(frozen=True)
class AffineRoot:
    """beta + k*delta; beta is a coroot written in the Y^vee basis of the datum"""
    beta: Vector
    k: int

    def is_positive(self, datum: RootDatum) -> bool:
        if self.k != 0:
            return self.k > 0
        return datum.is_positive_coroot(self.beta)

    def is_negative(self, datum: RootDatum) -> bool:
        return not self.is_positive(datum)

    def is_genuine(self, datum: RootDatum) -> bool:
        return datum.is_coroot(self.beta)

    def __neg__(self) -> "AffineRoot":
        return AffineRoot(vec_neg(self.beta), -self.k)

    def shift(self, d: int) -> "AffineRoot":
        """beta + (k + d)*delta"""
        return AffineRoot(self.beta, self.k + d)

    def __str__(self) -> str:
        return f"{list(self.beta)}{self.k:+d}d"


def simple_affine_root(datum: RootDatum, i: int) -> AffineRoot:
    """alpha_i; alpha_0 = delta - theta"""
    if i == 0:
        if datum.highest_coroot is None:
            raise ValueError(f"{datum.selector} has no affine node")
        return AffineRoot(vec_neg(datum.highest_coroot), 1)
    return AffineRoot(datum.simple_coroot(i), 0)


def positive_finite_roots(datum: RootDatum) -> List[AffineRoot]:
    return [AffineRoot(beta, 0) for beta in datum.positive_coroots]
