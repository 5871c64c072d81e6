"""
Hecke Algebra Elements
Sparse T-basis arithmetic in H(W_e): products, inverses of T_w and the bar involution
"""

import logging
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Tuple, Union

from affine_weyl.errors import DatumMismatchError
from affine_weyl.group_element import GroupElement, identity
from affine_weyl.root_datum import RootDatum

from .laurent import ONE, XI, LaurentInt

logger = logging.getLogger(__name__)

Coefficient = Union[int, LaurentInt]


class HeckeElt:
    """Finite sum of c_x T_x over one root datum; no zero coefficients are stored"""

    __slots__ = ("datum", "_terms")

    def __init__(self, datum: RootDatum, terms: Union[Mapping[GroupElement, Coefficient], Iterable[Tuple[GroupElement, Coefficient]], None] = None):
        self.datum = datum
        accumulated: Dict[GroupElement, LaurentInt] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for x, c in items:
                if x.datum is not datum and x.datum != datum:
                    raise DatumMismatchError(f"{x.datum.selector} term in a {datum.selector} element")
                total = accumulated.get(x)
                c = LaurentInt.coerce(c)
                accumulated[x] = c if total is None else total + c
        self._terms = {x: c for x, c in accumulated.items() if c}

    @classmethod
    def zero(cls, datum: RootDatum) -> "HeckeElt":
        return cls(datum)

    @classmethod
    def _trusted(cls, datum: RootDatum, terms: Dict[GroupElement, LaurentInt]) -> "HeckeElt":
        h = cls.__new__(cls)
        h.datum = datum
        h._terms = {x: c for x, c in terms.items() if c}
        return h

    # inspection

    def items(self) -> Iterator[Tuple[GroupElement, LaurentInt]]:
        return iter(self._terms.items())

    def support(self) -> List[GroupElement]:
        return list(self._terms)

    def coefficient(self, x: GroupElement) -> LaurentInt:
        return self._terms.get(x, LaurentInt())

    def sorted_terms(self) -> List[Tuple[GroupElement, LaurentInt]]:
        """Terms ordered by (length, normal form)"""
        return sorted(self._terms.items(), key=lambda item: (item[0].length, str(item[0])))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, HeckeElt):
            return NotImplemented
        return self._terms == other._terms and (not self._terms or self.datum == other.datum)

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        return f"HeckeElt({self.datum.selector}, {self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"({c}) T[{x}]" for x, c in self.sorted_terms())

    # module structure

    def _check(self, other: "HeckeElt") -> None:
        if other.datum is not self.datum and other.datum != self.datum:
            raise DatumMismatchError(f"{self.datum.selector} vs {other.datum.selector}")

    def __add__(self, other: "HeckeElt") -> "HeckeElt":
        self._check(other)
        terms = dict(self._terms)
        for x, c in other._terms.items():
            total = terms.get(x)
            terms[x] = c if total is None else total + c
        return HeckeElt._trusted(self.datum, terms)

    def __neg__(self) -> "HeckeElt":
        return HeckeElt._trusted(self.datum, {x: -c for x, c in self._terms.items()})

    def __sub__(self, other: "HeckeElt") -> "HeckeElt":
        return self + (-other)

    def scale(self, c: Coefficient) -> "HeckeElt":
        c = LaurentInt.coerce(c)
        return HeckeElt._trusted(self.datum, {x: c * v for x, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, HeckeElt):
            return t_multiply(self, other)
        if isinstance(other, (int, LaurentInt)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, LaurentInt)):
            return self.scale(other)
        return NotImplemented

    def bar(self, cache: Optional["BarCache"] = None) -> "HeckeElt":
        return bar(self, cache)


def T(w: GroupElement) -> HeckeElt:
    """The standard basis element T_w"""
    return HeckeElt._trusted(w.datum, {w: ONE})


def T_identity(datum: RootDatum) -> HeckeElt:
    return T(identity(datum))


def left_generator(i: int, h: HeckeElt) -> HeckeElt:
    """T_{s_i} * h"""
    terms: Dict[GroupElement, LaurentInt] = {}
    for x, c in h.items():
        sx = x.left_reflect(i)
        terms[sx] = terms.get(sx, LaurentInt()) + c
        if x.left_descent(i):
            terms[x] = terms.get(x, LaurentInt()) + XI * c
    return HeckeElt._trusted(h.datum, terms)


def right_generator(h: HeckeElt, i: int) -> HeckeElt:
    """h * T_{s_i}"""
    terms: Dict[GroupElement, LaurentInt] = {}
    for x, c in h.items():
        xs = x.right_reflect(i)
        terms[xs] = terms.get(xs, LaurentInt()) + c
        if x.right_descent(i):
            terms[x] = terms.get(x, LaurentInt()) + XI * c
    return HeckeElt._trusted(h.datum, terms)


def left_length_zero(p: GroupElement, h: HeckeElt) -> HeckeElt:
    """T_p * h for p of length zero"""
    return HeckeElt._trusted(h.datum, {p * x: c for x, c in h.items()})


def right_length_zero(h: HeckeElt, p: GroupElement) -> HeckeElt:
    return HeckeElt._trusted(h.datum, {x * p: c for x, c in h.items()})


def _factor(w: GroupElement) -> Tuple[GroupElement, Tuple[int, ...]]:
    """(pi, letters) with w = pi * s_{i1} ... s_{il} reduced"""
    return w.pi_part, w.reduced_word().letters


def left_multiply_by_T(w: GroupElement, h: HeckeElt) -> HeckeElt:
    """T_w * h"""
    pi, letters = _factor(w)
    for i in reversed(letters):
        h = left_generator(i, h)
    return left_length_zero(pi, h) if not pi.is_identity else h


def right_multiply_by_T(h: HeckeElt, w: GroupElement) -> HeckeElt:
    """h * T_w"""
    pi, letters = _factor(w)
    if not pi.is_identity:
        h = right_length_zero(h, pi)
    for i in letters:
        h = right_generator(h, i)
    return h


def _accumulate(terms: Dict[GroupElement, LaurentInt], h: HeckeElt, c: LaurentInt) -> None:
    for x, v in h.items():
        total = terms.get(x)
        terms[x] = c * v if total is None else total + c * v


def t_multiply(a: HeckeElt, b: HeckeElt) -> HeckeElt:
    """Product in H(W_e), expanding the factor with the smaller support"""
    a._check(b)
    terms: Dict[GroupElement, LaurentInt] = {}
    if len(a) <= len(b):
        for x, c in a.items():
            _accumulate(terms, left_multiply_by_T(x, b), c)
    else:
        for y, c in b.items():
            _accumulate(terms, right_multiply_by_T(a, y), c)
    return HeckeElt._trusted(a.datum, terms)


def t_inverse(w: GroupElement) -> HeckeElt:
    """T_w^{-1}, built from T_s^{-1} = T_s - xi"""
    pi, letters = _factor(w)
    h = T(pi.inverse())
    for i in letters:
        h = left_generator(i, h) - h.scale(XI)
    return h


class BarCache:
    """bar(T_x) in the T-basis, keyed by x; owned by the caller"""

    def __init__(self):
        self._bars: Dict[GroupElement, HeckeElt] = {}

    def __len__(self) -> int:
        return len(self._bars)

    def bar_of_T(self, x: GroupElement) -> HeckeElt:
        """bar(T_x) = T_{x^{-1}}^{-1}, from bar(T_{s x'}) = (T_s - xi) bar(T_{x'})"""
        cached = self._bars.get(x)
        if cached is not None:
            return cached
        chain = []
        g = x
        while g not in self._bars and g.length > 0:
            i = g.left_descents[0]
            chain.append((g, i))
            g = g.left_reflect(i)
        h = self._bars.get(g)
        if h is None:
            h = T(g)
            self._bars[g] = h
        for element, i in reversed(chain):
            h = left_generator(i, h) - h.scale(XI)
            self._bars[element] = h
        return h


def bar(h: HeckeElt, cache: Optional[BarCache] = None) -> HeckeElt:
    """The ring involution sum c_x T_x -> sum bar(c_x) T_{x^{-1}}^{-1}"""
    cache = BarCache() if cache is None else cache
    terms: Dict[GroupElement, LaurentInt] = {}
    for x, c in h.items():
        _accumulate(terms, cache.bar_of_T(x), c.bar())
    return HeckeElt._trusted(h.datum, terms)
