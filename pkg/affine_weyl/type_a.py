"""
Type A Windows
The affine permutation model of W_e for GL_n and SL_n: an element is recorded by its word w_1 ... w_n
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import List, Sequence, Tuple

from .errors import InvalidWindowError
from .group_element import GroupElement, from_letters, translation
from .lattice import Vector, mat_vec
from .root_datum import FAMILY_GL, RootDatum


@dataclass(frozen=True)
class TypeAWindow:
    """Values w(1), ..., w(n) of the affine permutation; w(i + n) = w(i) + n"""
    entries: Tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.entries)

    def validate(self) -> None:
        n = self.n
        if n == 0:
            raise InvalidWindowError("empty window")
        residues = {(w - 1) % n for w in self.entries}
        if len(residues) != n:
            raise InvalidWindowError(f"window {list(self.entries)} repeats a residue mod {n}")
        if sum(w - i for i, w in enumerate(self.entries, start=1)) % n:
            raise InvalidWindowError(f"window {list(self.entries)} violates sum(w_i - i) = 0 mod {n}")

    def shifted(self, k: int) -> "TypeAWindow":
        """Add k*n to every entry (multiplication by pi^{kn})"""
        return TypeAWindow(tuple(w + k * self.n for w in self.entries))

    def right_descents(self) -> List[int]:
        """i in 1..n-1 with w_i > w_{i+1}, plus 0 when w(0) = w_n - n > w_1"""
        n = self.n
        found = [i for i in range(1, n) if self.entries[i - 1] > self.entries[i]]
        if self.entries[-1] - n > self.entries[0]:
            found.insert(0, 0)
        return found

    def __str__(self) -> str:
        return " ".join(str(w) for w in self.entries)


@lru_cache(maxsize=None)
def _epsilon_images(datum: RootDatum) -> Tuple[Vector, ...]:
    """eps_1, ..., eps_n written in the Y basis of the datum"""
    n = datum.size
    if datum.family == FAMILY_GL:
        return tuple(tuple(int(k == j) for k in range(n)) for j in range(n))
    return tuple(
        tuple(int(i == j) - int(i + 1 == j) for i in range(n - 1)) for j in range(n)
    )


def epsilon_coordinates(datum: RootDatum, weight: Sequence[int]) -> Vector:
    """eps-coordinates of an element of Y; for SL_n the lift with last coordinate 0"""
    datum.require_type_a("epsilon coordinates")
    if datum.family == FAMILY_GL:
        return tuple(weight)
    n = datum.size
    return tuple(sum(weight[j] for j in range(i, n - 1)) for i in range(n))


def from_epsilon_coordinates(datum: RootDatum, eps: Sequence[int]) -> Vector:
    datum.require_type_a("epsilon coordinates")
    if datum.family == FAMILY_GL:
        return tuple(eps)
    return tuple(eps[i] - eps[i + 1] for i in range(datum.size - 1))


def permutation_of(u: GroupElement) -> Tuple[int, ...]:
    """sigma with u(eps_j) = eps_{sigma(j)}, as the tuple (sigma(1), ..., sigma(n))"""
    images = _epsilon_images(u.datum)
    position = {v: j + 1 for j, v in enumerate(images)}
    return tuple(position[mat_vec(u.fin, v)] for v in images)


def finite_from_permutation(datum: RootDatum, sigma: Sequence[int]) -> GroupElement:
    """The element of W_f = S_n acting on indices by sigma"""
    perm = list(sigma)
    letters = []
    while True:
        i = next((i for i in range(1, len(perm)) if perm[i - 1] > perm[i]), None)
        if i is None:
            break
        perm[i - 1], perm[i] = perm[i], perm[i - 1]
        letters.append(i)
    return from_letters(datum, tuple(reversed(letters)))


def window_of(g: GroupElement) -> TypeAWindow:
    """
    The word of g.

    For SL_n the window is only defined up to a global shift by a multiple
    of n; the representative returned is the one with 1 <= w_1 <= n.
    """
    g.datum.require_type_a("window_of")
    n = g.datum.size
    sigma = permutation_of(g)
    lam = epsilon_coordinates(g.datum, g.trans)
    window = TypeAWindow(tuple(s + n * lam[s - 1] for s in sigma))
    if g.datum.family == FAMILY_GL:
        return window
    return window.shifted(-((window.entries[0] - 1) // n))


def element_of(datum: RootDatum, window: Sequence[int]) -> GroupElement:
    datum.require_type_a("element_of")
    window = window if isinstance(window, TypeAWindow) else TypeAWindow(tuple(window))
    n = datum.size
    if window.n != n:
        raise InvalidWindowError(f"window of length {window.n} given for {datum.selector}")
    window.validate()
    sigma = tuple((w - 1) % n + 1 for w in window.entries)
    eps = [0] * n
    for s, w in zip(sigma, window.entries):
        eps[s - 1] = (w - s) // n
    u = finite_from_permutation(datum, sigma)
    return translation(datum, from_epsilon_coordinates(datum, eps)) * u


def balanced_window(g: GroupElement) -> TypeAWindow:
    """For SL_n, the lift with 0 <= sum(w_i - i)/n < n; for GL_n the window itself"""
    window = window_of(g)
    if g.datum.family == FAMILY_GL:
        return window
    n = window.n
    k = sum(w - i for i, w in enumerate(window.entries, start=1)) // n
    return window.shifted(-(k // n))


def windows_equal_mod_shift(a: Sequence[int], b: Sequence[int], n: int) -> bool:
    if len(a) != len(b):
        return False
    differences = {x - y for x, y in zip(a, b)}
    return len(differences) == 1 and next(iter(differences)) % n == 0


def pi_lift(window: TypeAWindow) -> int:
    """Exponent k of pi^k read off the window without reduction mod n"""
    return sum(w - i for i, w in enumerate(window.entries, start=1)) // window.n
