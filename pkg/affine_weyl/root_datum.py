"""
Root Data
Finite root data (Y, simple roots, simple coroots) and the affine system built on top of them
"""

import json
import logging
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

import sympy

from .errors import InvalidCartanError, UnsupportedDatumError
from .lattice import Matrix, Vector, reflection_matrix, unit_vector, vec_add, vec_scale, zero_vector

logger = logging.getLogger(__name__)

FAMILY_SL = "SL"
FAMILY_GL = "GL"
FAMILY_CARTAN = "cartan"


def type_a_cartan(rank: int) -> Matrix:
    """Cartan matrix of type A_rank"""
    return tuple(
        tuple(2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(rank))
        for i in range(rank)
    )


def _symmetrizer(cartan: Matrix) -> Tuple[Fraction, ...]:
    """Positive d_i with d_i A_ij = d_j A_ji, normalized so d_0 = 1"""
    n = len(cartan)
    d: List[Optional[Fraction]] = [None] * n
    d[0] = Fraction(1)
    queue = deque([0])
    while queue:
        i = queue.popleft()
        for j in range(n):
            if j == i or cartan[i][j] == 0:
                continue
            candidate = d[i] * cartan[i][j] / cartan[j][i]
            if d[j] is None:
                d[j] = candidate
                queue.append(j)
            elif d[j] != candidate:
                raise InvalidCartanError("Cartan matrix is not symmetrizable")
    if any(x is None for x in d):
        raise InvalidCartanError("Dynkin diagram is not connected")
    return tuple(d)


def validate_cartan(cartan: Sequence[Sequence[int]]) -> Tuple[Matrix, Tuple[Fraction, ...]]:
    """
    Check that a matrix is an irreducible finite-type Cartan matrix.

    Returns the matrix as nested tuples together with its symmetrizer.
    """
    n = len(cartan)
    if any(len(row) != n for row in cartan):
        raise InvalidCartanError("Cartan matrix must be square")
    A = tuple(tuple(int(x) for x in row) for row in cartan)
    if n == 0:
        return A, ()
    for i in range(n):
        if A[i][i] != 2:
            raise InvalidCartanError(f"diagonal entry {i} is {A[i][i]}, expected 2")
        for j in range(n):
            if i != j and A[i][j] > 0:
                raise InvalidCartanError(f"off-diagonal entry ({i},{j}) is positive")
            if (A[i][j] == 0) != (A[j][i] == 0):
                raise InvalidCartanError(f"entries ({i},{j}) and ({j},{i}) disagree on vanishing")
    d = _symmetrizer(A)
    symmetrized = sympy.Matrix(n, n, lambda i, j: sympy.Rational(d[i].numerator, d[i].denominator) * A[i][j])
    for k in range(1, n + 1):
        if symmetrized[:k, :k].det() <= 0:
            raise InvalidCartanError("Cartan matrix is not of finite type")
    return A, d


def _root_pairs(cartan: Matrix) -> Dict[Vector, Vector]:
    """Every coroot (coroot-lattice coordinates) mapped to its root (root-lattice coordinates)"""
    n = len(cartan)
    pairs: Dict[Vector, Vector] = {}
    queue = deque((unit_vector(n, i), unit_vector(n, i)) for i in range(n))
    while queue:
        b, a = queue.popleft()
        if b in pairs:
            continue
        pairs[b] = a
        for j in range(n):
            p = sum(b[k] * cartan[k][j] for k in range(n))
            q = sum(a[k] * cartan[j][k] for k in range(n))
            if p == 0 and q == 0:
                continue
            nb = tuple(b[k] - p * (k == j) for k in range(n))
            na = tuple(a[k] - q * (k == j) for k in range(n))
            queue.append((nb, na))
        nb, na = tuple(-x for x in b), tuple(-x for x in a)
        if nb not in pairs:
            queue.append((nb, na))
    return pairs


def _combine(coefficients: Sequence[int], basis: Sequence[Vector], m: int) -> Vector:
    total = zero_vector(m)
    for c, v in zip(coefficients, basis):
        if c:
            total = vec_add(total, vec_scale(c, v))
    return total


@dataclass(frozen=True)
class RootDatum:
    """
    A finite root datum together with the data of its affine system.

    Vectors of Y (weights, translations) and of Y^vee (coroots) are stored as
    integer tuples of length lattice_dim in mutually dual bases, so the pairing
    is the dot product. simple_roots[j] lives in Y, simple_coroots[i] in Y^vee,
    and cartan[i][j] = <simple_roots[j], simple_coroots[i]>.
    """
    family: str
    size: int
    cartan: Matrix
    lattice_dim: int
    simple_roots: Tuple[Vector, ...]
    simple_coroots: Tuple[Vector, ...]
    fundamental_weights: Tuple[Vector, ...]
    selector: str = field(compare=False)
    symmetrizer: Tuple[Fraction, ...] = field(compare=False, repr=False, default=())
    coroot_roots: Dict[Vector, Vector] = field(compare=False, repr=False, default_factory=dict)
    coroot_coordinates: Dict[Vector, Vector] = field(compare=False, repr=False, default_factory=dict)
    positive_coroots: Tuple[Vector, ...] = field(compare=False, repr=False, default=())
    highest_coroot: Optional[Vector] = field(compare=False, repr=False, default=None)
    short_dominant_root: Optional[Vector] = field(compare=False, repr=False, default=None)
    reflection_matrices: Tuple[Matrix, ...] = field(compare=False, repr=False, default=())

    def __post_init__(self):
        n = self.rank
        pairs = _root_pairs(self.cartan) if n else {}
        coroot_roots: Dict[Vector, Vector] = {}
        coroot_coordinates: Dict[Vector, Vector] = {}
        positive = []
        for b, a in pairs.items():
            coroot = _combine(b, self.simple_coroots, self.lattice_dim)
            coroot_roots[coroot] = _combine(a, self.simple_roots, self.lattice_dim)
            coroot_coordinates[coroot] = b
            if all(x >= 0 for x in b):
                positive.append(coroot)
        positive.sort(key=lambda c: (sum(coroot_coordinates[c]), coroot_coordinates[c]))
        theta = positive[-1] if positive else None
        object.__setattr__(self, "coroot_roots", coroot_roots)
        object.__setattr__(self, "coroot_coordinates", coroot_coordinates)
        object.__setattr__(self, "positive_coroots", tuple(positive))
        object.__setattr__(self, "highest_coroot", theta)
        object.__setattr__(self, "short_dominant_root", coroot_roots[theta] if theta else None)
        object.__setattr__(
            self,
            "reflection_matrices",
            tuple(reflection_matrix(self.simple_roots[i], self.simple_coroots[i]) for i in range(n)),
        )
        logger.debug(f"Root datum {self.selector}: {len(positive)} positive coroots")

    def __reduce__(self):
        return (parse_datum, (self.selector,))

    @property
    def rank(self) -> int:
        return len(self.cartan)

    @property
    def finite_indices(self) -> range:
        """Indices 1..n of the finite simple reflections"""
        return range(1, self.rank + 1)

    @property
    def affine_indices(self) -> range:
        """Indices 0..n of the affine simple reflections (empty for rank 0)"""
        return range(0, self.rank + 1) if self.rank else range(0)

    @property
    def is_type_a(self) -> bool:
        return self.family in (FAMILY_SL, FAMILY_GL)

    @property
    def is_simply_connected(self) -> bool:
        return self.family != FAMILY_GL

    @property
    def rho(self) -> Vector:
        return _combine([1] * self.rank, self.fundamental_weights, self.lattice_dim)

    def simple_coroot(self, i: int) -> Vector:
        """alpha_i for i in 1..n, as a vector of Y^vee"""
        return self.simple_coroots[i - 1]

    def simple_root(self, i: int) -> Vector:
        return self.simple_roots[i - 1]

    def fundamental_weight(self, i: int) -> Vector:
        return self.fundamental_weights[i - 1]

    def is_coroot(self, beta: Sequence[int]) -> bool:
        return tuple(beta) in self.coroot_roots

    def is_positive_coroot(self, beta: Sequence[int]) -> bool:
        coordinates = self.coroot_coordinates.get(tuple(beta))
        if coordinates is None:
            raise ValueError(f"{tuple(beta)} is not a coroot of {self.selector}")
        return all(x >= 0 for x in coordinates)

    def pairings(self, weight: Sequence[int]) -> Vector:
        """(<weight, alpha_i>) for i in 1..n"""
        return tuple(sum(w * c for w, c in zip(weight, coroot)) for coroot in self.simple_coroots)

    def from_fundamental(self, coordinates: Sequence[int]) -> Vector:
        """Element of Y with the given coefficients on the fundamental weights"""
        if len(coordinates) != self.rank:
            raise ValueError(f"expected {self.rank} coordinates, got {len(coordinates)}")
        return _combine(coordinates, self.fundamental_weights, self.lattice_dim)

    def require_simply_connected(self, operation: str) -> None:
        if not self.is_simply_connected:
            raise UnsupportedDatumError(f"{operation} needs a simply-connected datum, got {self.selector}")

    def require_type_a(self, operation: str) -> None:
        if not self.is_type_a:
            raise UnsupportedDatumError(f"{operation} needs a type A datum, got {self.selector}")


def sl_datum(n: int) -> RootDatum:
    """SL_n: Y is the weight lattice written in the fundamental-weight basis"""
    if n < 1:
        raise InvalidCartanError(f"SL_n needs n >= 1, got {n}")
    cartan = type_a_cartan(n - 1)
    _, d = validate_cartan(cartan)
    rank = n - 1
    return RootDatum(
        family=FAMILY_SL,
        size=n,
        cartan=cartan,
        lattice_dim=rank,
        simple_roots=tuple(tuple(cartan[i][j] for i in range(rank)) for j in range(rank)),
        simple_coroots=tuple(unit_vector(rank, i) for i in range(rank)),
        fundamental_weights=tuple(unit_vector(rank, i) for i in range(rank)),
        selector=f"SL:{n}",
        symmetrizer=d,
    )


def gl_datum(n: int) -> RootDatum:
    """GL_n: Y = Y^vee = Z^n with the standard basis"""
    if n < 1:
        raise InvalidCartanError(f"GL_n needs n >= 1, got {n}")
    cartan = type_a_cartan(n - 1)
    _, d = validate_cartan(cartan)
    differences = tuple(
        tuple(int(k == i) - int(k == i + 1) for k in range(n)) for i in range(n - 1)
    )
    return RootDatum(
        family=FAMILY_GL,
        size=n,
        cartan=cartan,
        lattice_dim=n,
        simple_roots=differences,
        simple_coroots=differences,
        fundamental_weights=tuple(tuple(int(k <= i) for k in range(n)) for i in range(n - 1)),
        selector=f"GL:{n}",
        symmetrizer=d,
    )


def cartan_datum(matrix: Sequence[Sequence[int]]) -> RootDatum:
    """Simply-connected datum of a finite-type Cartan matrix"""
    cartan, d = validate_cartan(matrix)
    rank = len(cartan)
    return RootDatum(
        family=FAMILY_CARTAN,
        size=rank,
        cartan=cartan,
        lattice_dim=rank,
        simple_roots=tuple(tuple(cartan[i][j] for i in range(rank)) for j in range(rank)),
        simple_coroots=tuple(unit_vector(rank, i) for i in range(rank)),
        fundamental_weights=tuple(unit_vector(rank, i) for i in range(rank)),
        selector="cartan:" + json.dumps([list(row) for row in cartan], separators=(",", ":")),
        symmetrizer=d,
    )


@lru_cache(maxsize=None)
def parse_datum(selector: str) -> RootDatum:
    """
    Build a root datum from a selector string.

    Accepted forms: SL:n, GL:n, cartan:[[...],...]. Equal selectors give the
    same object.
    """
    kind, sep, rest = selector.strip().partition(":")
    if not sep:
        raise InvalidCartanError(f"datum selector '{selector}' has no ':'")
    kind = kind.strip()
    if kind.upper() in (FAMILY_SL, FAMILY_GL):
        try:
            n = int(rest)
        except ValueError:
            raise InvalidCartanError(f"datum selector '{selector}' needs an integer size")
        return sl_datum(n) if kind.upper() == FAMILY_SL else gl_datum(n)
    if kind.lower() == FAMILY_CARTAN:
        try:
            matrix = json.loads(rest)
        except json.JSONDecodeError as e:
            raise InvalidCartanError(f"cannot read Cartan matrix in '{selector}': {e}")
        return cartan_datum(matrix)
    raise InvalidCartanError(f"unknown datum family '{kind}'")
