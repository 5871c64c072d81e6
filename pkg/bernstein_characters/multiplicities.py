"""
Weight Multiplicities
Freudenthal's recursion, the Weyl dimension formula, a Kostka-number oracle for SL_n and Brauer-Klimyk tensor products
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Any, Dict, List, Sequence, Tuple

from affine_weyl.errors import AffineKLError, CapExceededError
from affine_weyl.lattice import dot
from affine_weyl.root_datum import FAMILY_SL, RootDatum

from .weights import (
    Weight,
    dominant_conjugate,
    inner_product,
    inverse_cartan,
    positive_root_coords,
    simple_root_coords,
)

logger = logging.getLogger(__name__)

DEFAULT_DIMENSION_CAP = 200

WeightCoords = Tuple[int, ...]


@dataclass
class CharacterPoly:
    """Weights mu of V(lambda) with their multiplicities d_{mu,lambda}"""
    datum: RootDatum
    lam: WeightCoords
    weights: Dict[WeightCoords, int] = field(default_factory=dict)

    @property
    def dimension(self) -> int:
        return sum(self.weights.values())

    def multiplicity(self, mu: Sequence[int]) -> int:
        return self.weights.get(tuple(mu), 0)

    def is_symmetric(self) -> bool:
        """d_mu = d_{s_i mu} for every simple reflection"""
        for mu, m in self.weights.items():
            for i in self.datum.finite_indices:
                if self.multiplicity(Weight(self.datum, mu).reflect(i).coords) != m:
                    return False
        return True

    def to_dict(self) -> Dict[str, Any]:
        return {
            "lambda": list(self.lam),
            "weights": [{"mu": list(mu), "mult": m} for mu, m in sorted(self.weights.items(), reverse=True)],
        }

    @classmethod
    def from_dict(cls, datum: RootDatum, data: Dict[str, Any]) -> "CharacterPoly":
        return cls(datum, tuple(data["lambda"]), {tuple(w["mu"]): int(w["mult"]) for w in data["weights"]})


def weyl_dimension(lam: Weight) -> int:
    """prod over positive coroots beta of <lam + rho, beta> / <rho, beta>"""
    datum = lam.datum
    rho = datum.rho
    shifted = tuple(a + b for a, b in zip(lam.y, rho))
    value = Fraction(1)
    for beta in datum.positive_coroots:
        value *= Fraction(dot(shifted, beta), dot(rho, beta))
    return int(value)


def weight_multiplicities(lam: Weight, dimension_cap: int = DEFAULT_DIMENSION_CAP) -> CharacterPoly:
    """
    Freudenthal's formula, weights processed by depth below lam:

    ((lam+rho|lam+rho) - (mu+rho|mu+rho)) m(mu) = 2 sum_{alpha>0} sum_{k>=1} (mu+k alpha|alpha) m(mu+k alpha)
    """
    if not lam.is_dominant():
        raise AffineKLError(f"weight {lam} is not dominant")
    dimension = weyl_dimension(lam)
    if dimension > dimension_cap:
        raise CapExceededError("representation dimension", dimension_cap, dimension)
    datum = lam.datum
    n = datum.rank
    rho = (1,) * n
    top = tuple(a + 1 for a in lam.coords)
    top_norm = inner_product(datum, top, top)
    roots = [root for root, _ in positive_root_coords(datum)]
    simple = [simple_root_coords(datum, j) for j in datum.finite_indices]

    mult: Dict[WeightCoords, int] = {lam.coords: 1}
    level = [lam.coords]
    while level:
        candidates = {}
        for mu in level:
            for alpha in simple:
                candidates[tuple(a - b for a, b in zip(mu, alpha))] = None
        next_level = []
        for mu in candidates:
            if mu in mult:
                continue
            total = Fraction(0)
            for alpha in roots:
                k = 1
                while True:
                    higher = tuple(m + k * a for m, a in zip(mu, alpha))
                    m_higher = mult.get(higher, 0)
                    if m_higher == 0 and not _below(higher, lam.coords, datum):
                        break
                    total += inner_product(datum, higher, alpha) * m_higher
                    k += 1
            shifted = tuple(m + r for m, r in zip(mu, rho))
            denominator = top_norm - inner_product(datum, shifted, shifted)
            if denominator <= 0:
                continue
            value = 2 * total / denominator
            if value.denominator != 1:
                raise AffineKLError(f"non-integral multiplicity {value} at {mu} in V{lam}")
            if value > 0:
                mult[mu] = int(value)
                next_level.append(mu)
        level = next_level
    character = CharacterPoly(datum, lam.coords, mult)
    if character.dimension != dimension:
        raise AffineKLError(f"weights of V{lam} add up to {character.dimension}, Weyl dimension is {dimension}")
    logger.debug(f"V{lam} of {datum.selector}: {len(mult)} weights, dimension {dimension}")
    return character


def _below(mu: WeightCoords, lam: WeightCoords, datum: RootDatum) -> bool:
    """lam - mu is a non-negative combination of simple roots"""
    difference = tuple(a - b for a, b in zip(lam, mu))
    inverse = inverse_cartan(datum)
    n = datum.rank
    coefficients = [sum(inverse[j][k] * difference[k] for k in range(n)) for j in range(n)]
    return all(c >= 0 and c.denominator == 1 for c in coefficients)


def kostka_number(shape: Sequence[int], content: Sequence[int]) -> int:
    """Number of semistandard Young tableaux of the given shape and content"""
    shape = [r for r in shape if r > 0]
    if sum(shape) != sum(content) or any(c < 0 for c in content):
        return 0
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    tableau: Dict[Tuple[int, int], int] = {}
    remaining = list(content)

    def fill(position: int) -> int:
        if position == len(cells):
            return 1
        r, c = cells[position]
        count = 0
        low = tableau[(r, c - 1)] if c > 0 else 1
        if r > 0:
            low = max(low, tableau[(r - 1, c)] + 1)
        for value in range(low, len(remaining) + 1):
            if remaining[value - 1] == 0:
                continue
            remaining[value - 1] -= 1
            tableau[(r, c)] = value
            count += fill(position + 1)
            remaining[value - 1] += 1
        tableau.pop((r, c), None)
        return count

    return fill(0)


def partition_of(lam: Weight) -> List[int]:
    """SL_n highest weight as a partition with n-1 rows: row k is c_k + ... + c_{n-1}"""
    coords = lam.coords
    return [sum(coords[k:]) for k in range(len(coords))]


def kostka_multiplicities(lam: Weight) -> CharacterPoly:
    """Weight multiplicities of V(lam) for SL_n from Kostka numbers"""
    datum = lam.datum
    if datum.family != FAMILY_SL:
        raise AffineKLError(f"the tableau oracle needs SL_n, got {datum.selector}")
    shape = partition_of(lam)
    size = sum(shape)
    n = datum.size
    weights: Dict[WeightCoords, int] = {}
    for content in product(range(size + 1), repeat=n):
        if sum(content) != size:
            continue
        k = kostka_number(shape, content)
        if k:
            mu = tuple(content[i] - content[i + 1] for i in range(n - 1))
            weights[mu] = weights.get(mu, 0) + k
    return CharacterPoly(datum, lam.coords, weights)


def tensor_product_decomposition(lam: Weight, mu: Weight, dimension_cap: int = DEFAULT_DIMENSION_CAP) -> Dict[WeightCoords, int]:
    """
    Brauer-Klimyk: V(lam) (x) V(mu) = sum over weights nu of V(mu) of
    sign(w) V(w.(lam + nu + rho) - rho), dropping terms fixed by a reflection.
    """
    datum = lam.datum
    rho = Weight.rho(datum)
    result: Dict[WeightCoords, int] = {}
    for nu, m in weight_multiplicities(mu, dimension_cap).weights.items():
        shifted = lam + Weight(datum, nu) + rho
        dominant, steps = dominant_conjugate(shifted)
        if any(c == 0 for c in dominant.coords):
            continue
        key = (dominant - rho).coords
        result[key] = result.get(key, 0) + (-1) ** steps * m
    return {k: v for k, v in result.items() if v}
