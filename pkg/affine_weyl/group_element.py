"""
Extended Affine Weyl Group Elements
Elements y^lambda * u of W_e stored in canonical form, with descents, length and reduced words
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from .affine_root import AffineRoot, simple_affine_root
from .errors import DatumMismatchError
from .lattice import (
    Matrix,
    Vector,
    dot,
    identity_matrix,
    mat_mul,
    mat_vec,
    reflection_matrix,
    transpose_vec,
    unit_vector,
    vec_add,
    vec_neg,
    zero_vector,
)
from .root_datum import FAMILY_GL, FAMILY_SL, RootDatum

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Word:
    """
    A product pi-token * s_{i1} ... s_{il}.

    Type A data use an integer exponent of pi; other data name a length-zero
    element by its translation part (pi_trans).
    """
    letters: Tuple[int, ...] = ()
    pi_exp: int = 0
    pi_trans: Optional[Vector] = None
    reduced: bool = False

    @property
    def has_pi(self) -> bool:
        return self.pi_exp != 0 or self.pi_trans is not None

    def format(self) -> str:
        tokens: List[str] = []
        if self.pi_trans is not None:
            tokens.append("pi[" + ",".join(str(c) for c in self.pi_trans) + "]")
        elif self.pi_exp == 1:
            tokens.append("pi")
        elif self.pi_exp != 0:
            tokens.append(f"pi^{self.pi_exp}")
        tokens.extend(f"s{i}" for i in self.letters)
        return " ".join(tokens) if tokens else "e"

    def __str__(self) -> str:
        return self.format()

    def evaluate(self, datum: RootDatum) -> "GroupElement":
        from .finite_weyl import pi_with_translation

        if self.pi_trans is not None:
            result = pi_with_translation(datum, self.pi_trans)
        else:
            result = pi_power(datum, self.pi_exp)
        tail = identity(datum)
        for i in reversed(self.letters):
            tail = tail.left_reflect(i)
        result = result * tail
        if self.reduced and result.length != len(self.letters):
            raise ValueError(f"word '{self.format()}' is flagged reduced but is not")
        return result


@lru_cache(maxsize=None)
def _generator_data(datum: RootDatum, i: int) -> Tuple[Vector, Vector, Vector]:
    """(t, a, c) with s_i = y^t (1 - a c^T)"""
    if i == 0:
        if datum.highest_coroot is None:
            raise ValueError(f"{datum.selector} has no affine node")
        phi = datum.short_dominant_root
        return phi, phi, datum.highest_coroot
    if not 1 <= i <= datum.rank:
        raise ValueError(f"generator index {i} out of range 0..{datum.rank}")
    return zero_vector(datum.lattice_dim), datum.simple_root(i), datum.simple_coroot(i)


@dataclass(frozen=True, eq=False)
class GroupElement:
    """
    The element y^trans * u of W_e, where u acts on Y by the matrix fin.

    Equality is equality of (trans, fin) over the same datum, so the stored form
    is canonical. Products with simple reflections are memoized on the instance.
    """
    datum: RootDatum
    trans: Vector
    fin: Matrix
    fin_inv: Matrix = field(repr=False)

    def __post_init__(self):
        object.__setattr__(self, "_hash", hash((self.trans, self.fin)))
        object.__setattr__(self, "_left", {})
        object.__setattr__(self, "_right", {})

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupElement):
            return NotImplemented
        return (
            self._hash == other._hash
            and self.trans == other.trans
            and self.fin == other.fin
            and (self.datum is other.datum or self.datum == other.datum)
        )

    def __hash__(self) -> int:
        return self._hash

    def __reduce__(self):
        return (GroupElement, (self.datum, self.trans, self.fin, self.fin_inv))

    def __repr__(self) -> str:
        return f"GroupElement({self.datum.selector}, {self})"

    def __str__(self) -> str:
        return self.reduced_word().format()

    def _check_datum(self, other: "GroupElement") -> None:
        if other.datum is not self.datum and other.datum != self.datum:
            raise DatumMismatchError(f"{self.datum.selector} vs {other.datum.selector}")

    # group law

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        if not isinstance(other, GroupElement):
            return NotImplemented
        self._check_datum(other)
        return GroupElement(
            self.datum,
            vec_add(self.trans, mat_vec(self.fin, other.trans)),
            mat_mul(self.fin, other.fin),
            mat_mul(other.fin_inv, self.fin_inv),
        )

    def inverse(self) -> "GroupElement":
        return GroupElement(self.datum, vec_neg(mat_vec(self.fin_inv, self.trans)), self.fin_inv, self.fin)

    def __pow__(self, k: int) -> "GroupElement":
        base = self if k >= 0 else self.inverse()
        result = identity(self.datum)
        for _ in range(abs(k)):
            result = result * base
        return result

    def left_reflect(self, i: int) -> "GroupElement":
        """s_i * self"""
        cached = self._left.get(i)
        if cached is not None:
            return cached
        t, a, c = _generator_data(self.datum, i)
        lam, M, Minv = self.trans, self.fin, self.fin_inv
        m = len(lam)
        shift = dot(c, lam)
        trans = tuple(t[r] + lam[r] - shift * a[r] for r in range(m))
        row = [sum(c[k] * M[k][col] for k in range(m)) for col in range(m)]
        fin = tuple(tuple(M[r][col] - a[r] * row[col] for col in range(m)) for r in range(m))
        Minv_a = mat_vec(Minv, a)
        fin_inv = tuple(tuple(Minv[r][col] - Minv_a[r] * c[col] for col in range(m)) for r in range(m))
        result = GroupElement(self.datum, trans, fin, fin_inv)
        self._left[i] = result
        return result

    def right_reflect(self, i: int) -> "GroupElement":
        """self * s_i"""
        cached = self._right.get(i)
        if cached is not None:
            return cached
        t, a, c = _generator_data(self.datum, i)
        lam, M, Minv = self.trans, self.fin, self.fin_inv
        m = len(lam)
        trans = vec_add(lam, mat_vec(M, t))
        M_a = mat_vec(M, a)
        fin = tuple(tuple(M[r][col] - M_a[r] * c[col] for col in range(m)) for r in range(m))
        row = [sum(c[k] * Minv[k][col] for k in range(m)) for col in range(m)]
        fin_inv = tuple(tuple(Minv[r][col] - a[r] * row[col] for col in range(m)) for r in range(m))
        result = GroupElement(self.datum, trans, fin, fin_inv)
        self._right[i] = result
        return result

    # actions

    def act_on_root(self, root: AffineRoot) -> AffineRoot:
        gamma = transpose_vec(self.fin_inv, root.beta)
        return AffineRoot(gamma, root.k - dot(gamma, self.trans))

    def act_on_point(self, point: Sequence[Fraction]) -> Tuple[Fraction, ...]:
        """Action on the level-1 plane, identified with Y tensor Q"""
        return tuple(self.trans[r] + sum(self.fin[r][k] * point[k] for k in range(len(point))) for r in range(len(point)))

    def _inverse_image_negative(self, root: AffineRoot) -> bool:
        k = root.k + dot(root.beta, self.trans)
        if k != 0:
            return k < 0
        return not self.datum.is_positive_coroot(transpose_vec(self.fin, root.beta))

    def left_descent(self, i: int) -> bool:
        """True iff s_i * self < self, i.e. self^{-1}(alpha_i) is negative"""
        return self._inverse_image_negative(simple_affine_root(self.datum, i))

    def right_descent(self, i: int) -> bool:
        """True iff self * s_i < self, i.e. self(alpha_i) is negative"""
        return self.act_on_root(simple_affine_root(self.datum, i)).is_negative(self.datum)

    @cached_property
    def left_descents(self) -> Tuple[int, ...]:
        return tuple(i for i in self.datum.affine_indices if self.left_descent(i))

    @cached_property
    def right_descents(self) -> Tuple[int, ...]:
        return tuple(i for i in self.datum.affine_indices if self.right_descent(i))

    # length and words

    @cached_property
    def _stripping(self) -> Tuple[Tuple[int, ...], "GroupElement"]:
        letters: List[int] = []
        g = self
        while True:
            descents = g.left_descents
            if not descents:
                return tuple(letters), g
            letters.append(descents[0])
            g = g.left_reflect(descents[0])

    @cached_property
    def length(self) -> int:
        """Number of greedy left-descent strips needed to reach a length-zero element"""
        return len(self._stripping[0])

    @cached_property
    def pi_part(self) -> "GroupElement":
        """The length-zero element pi with self = pi * v, v in W_a"""
        return self._stripping[1]

    @property
    def is_finite(self) -> bool:
        return not any(self.trans)

    @property
    def is_identity(self) -> bool:
        return self.is_finite and self.fin == identity_matrix(len(self.trans))

    @cached_property
    def pi_exp(self) -> Optional[int]:
        """Exponent k of the Pi-part pi^k (type A only; reduced mod n for SL_n)"""
        if self.datum.family == FAMILY_GL:
            return sum(self.trans)
        if self.datum.family == FAMILY_SL:
            return sum((j + 1) * c for j, c in enumerate(self.trans)) % self.datum.size
        return None

    @property
    def in_affine_subgroup(self) -> bool:
        if self.pi_exp is not None:
            return self.pi_exp == 0
        return self.pi_part.is_identity

    def finite_part(self) -> "GroupElement":
        """u, for self = y^trans * u"""
        return GroupElement(self.datum, zero_vector(len(self.trans)), self.fin, self.fin_inv)

    def reduced_word(self) -> Word:
        """pi-part first, then the lexicographically greedy reduced word of the W_a-part"""
        pi = self.pi_part
        v = pi.inverse() * self
        letters = v._stripping[0]
        if pi.is_identity:
            return Word(letters, reduced=True)
        if self.pi_exp is not None:
            return Word(letters, pi_exp=self.pi_exp, reduced=True)
        return Word(letters, pi_trans=pi.trans, reduced=True)

    def inversion_set(self) -> List[AffineRoot]:
        """{alpha in R_+ : self(alpha) in R_-}, enumerated coroot by coroot"""
        result = []
        for beta in self.datum.coroot_roots:
            gamma = transpose_vec(self.fin_inv, beta)
            c = dot(gamma, self.trans)
            k_min = 0 if self.datum.is_positive_coroot(beta) else 1
            k_max = c - 1 if self.datum.is_positive_coroot(gamma) else c
            result.extend(AffineRoot(beta, k) for k in range(k_min, k_max + 1))
        return result


def identity(datum: RootDatum) -> GroupElement:
    m = datum.lattice_dim
    return GroupElement(datum, zero_vector(m), identity_matrix(m), identity_matrix(m))


@lru_cache(maxsize=None)
def simple_reflection(datum: RootDatum, i: int) -> GroupElement:
    return identity(datum).left_reflect(i)


def translation(datum: RootDatum, weight: Sequence[int]) -> GroupElement:
    """y^weight, weight given in the Y basis of the datum"""
    m = datum.lattice_dim
    if len(weight) != m:
        raise ValueError(f"translation needs {m} coordinates, got {len(weight)}")
    return GroupElement(datum, tuple(weight), identity_matrix(m), identity_matrix(m))


def reflection(datum: RootDatum, coroot: Sequence[int]) -> GroupElement:
    """s_alpha for a finite coroot alpha"""
    coroot = tuple(coroot)
    root = datum.coroot_roots[coroot]
    matrix = reflection_matrix(root, coroot)
    return GroupElement(datum, zero_vector(datum.lattice_dim), matrix, matrix)


def from_letters(datum: RootDatum, letters: Sequence[int]) -> GroupElement:
    """s_{i1} ... s_{il}"""
    g = identity(datum)
    for i in reversed(letters):
        g = g.left_reflect(i)
    return g


@lru_cache(maxsize=None)
def type_a_pi(datum: RootDatum) -> GroupElement:
    """pi = y^{eps_1} s_1 s_2 ... s_{n-1}"""
    datum.require_type_a("pi")
    m = datum.lattice_dim
    eps_1 = unit_vector(m, 0) if m else ()
    return translation(datum, eps_1) * from_letters(datum, range(1, datum.size))


def pi_power(datum: RootDatum, k: int) -> GroupElement:
    if k == 0:
        return identity(datum)
    if datum.family == FAMILY_SL:
        k %= datum.size
    return type_a_pi(datum) ** k
