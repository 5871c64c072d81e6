"""
Bruhat Order
Lower intervals via the subword property, comparison, and bounded enumeration of W_e
"""

import logging
from typing import Dict, FrozenSet, List, Optional, Sequence

from .errors import CapExceededError, DatumMismatchError
from .finite_weyl import length_zero_elements
from .group_element import GroupElement, Word
from .root_datum import RootDatum

logger = logging.getLogger(__name__)

DEFAULT_LENGTH_CAP = 14


class BruhatIntervals:
    """Memoized lower intervals [e, w]; only elements up to length_cap are materialized"""

    def __init__(self, length_cap: int = DEFAULT_LENGTH_CAP):
        self.length_cap = length_cap
        self._intervals: Dict[GroupElement, FrozenSet[GroupElement]] = {}

    def __len__(self) -> int:
        return len(self._intervals)

    def lower_interval(self, w: GroupElement) -> FrozenSet[GroupElement]:
        if w.length > self.length_cap:
            raise CapExceededError("Bruhat interval length", self.length_cap, w.length)
        chain = []
        g = w
        while g not in self._intervals and g.length > 0:
            i = g.left_descents[0]
            chain.append((g, i))
            g = g.left_reflect(i)
        interval = self._intervals.get(g, frozenset([g]))
        for h, i in reversed(chain):
            interval = interval | frozenset(x.left_reflect(i) for x in interval)
            self._intervals[h] = interval
        logger.debug(f"interval below {w} has {len(interval)} elements")
        return interval


def bruhat_leq(x: GroupElement, w: GroupElement, intervals: Optional[BruhatIntervals] = None) -> bool:
    """
    x <= w in the Bruhat order of W_e.

    Walks a reduced word of w letter by letter, consuming the letter from x
    whenever it is a left descent of x (greedy subword matching); Pi-parts are
    compared once the word is exhausted.
    """
    if x.datum is not w.datum and x.datum != w.datum:
        raise DatumMismatchError(f"{x.datum.selector} vs {w.datum.selector}")
    if intervals is not None and w.length <= intervals.length_cap:
        return x in intervals.lower_interval(w)
    while True:
        if x.length > w.length:
            return False
        if w.length == 0:
            return x == w
        i = w.left_descents[0]
        if x.left_descent(i):
            x = x.left_reflect(i)
        w = w.left_reflect(i)


def subword_products(datum: RootDatum, word: Word) -> FrozenSet[GroupElement]:
    """Products of all subwords of word (the Pi-token is always kept)"""
    products = {Word(pi_exp=word.pi_exp, pi_trans=word.pi_trans).evaluate(datum)}
    for i in word.letters:
        products |= {p.right_reflect(i) for p in products}
    return frozenset(products)


def elements_up_to_length(datum: RootDatum, max_length: int) -> List[GroupElement]:
    """Every element of W_e of length <= max_length, sorted by length (Pi must be finite)"""
    level = list(length_zero_elements(datum))
    result = list(level)
    for _ in range(max_length):
        following = {}
        for g in level:
            for i in datum.affine_indices:
                if not g.left_descent(i):
                    following[g.left_reflect(i)] = None
        level = list(following)
        result.extend(level)
    return result


def is_reduced_word(datum: RootDatum, letters: Sequence[int]) -> bool:
    return Word(tuple(letters)).evaluate(datum).length == len(letters)
