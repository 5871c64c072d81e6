import pytest
from hypothesis import given, settings

from affine_weyl.bruhat import (
    BruhatIntervals,
    bruhat_leq,
    elements_up_to_length,
    is_reduced_word,
    subword_products,
)
from affine_weyl.errors import CapExceededError, UnsupportedDatumError
from affine_weyl.finite_weyl import finite_weyl_group, longest_element
from affine_weyl.group_element import from_letters, identity, pi_power
from conftest import elements


def test_small_comparisons(sl3):
    s1 = from_letters(sl3, [1])
    assert bruhat_leq(identity(sl3), s1)
    assert bruhat_leq(s1, from_letters(sl3, [1, 0]))
    assert not bruhat_leq(from_letters(sl3, [1, 0]), s1)
    assert not bruhat_leq(pi_power(sl3, 1), pi_power(sl3, 2))
    assert not bruhat_leq(identity(sl3), pi_power(sl3, 1))


def test_w0_interval_is_finite_weyl_group(sl3):
    intervals = BruhatIntervals()
    assert intervals.lower_interval(longest_element(sl3)) == frozenset(finite_weyl_group(sl3))


def test_interval_cap(sl3):
    intervals = BruhatIntervals(length_cap=2)
    with pytest.raises(CapExceededError) as info:
        intervals.lower_interval(longest_element(sl3))
    assert info.value.cap == 2
    assert info.value.requested == 3


def test_elements_up_to_length(sl2, sl3):
    assert len(elements_up_to_length(sl2, 3)) == 14
    levels = elements_up_to_length(sl3, 2)
    assert len(levels) == 3 * (1 + 3 + 6)
    assert [g.length for g in levels] == sorted(g.length for g in levels)


def test_elements_up_to_length_needs_finite_pi(gl3):
    with pytest.raises(UnsupportedDatumError):
        elements_up_to_length(gl3, 1)


def test_reduced_words(sl3):
    assert is_reduced_word(sl3, [1, 2, 1])
    assert is_reduced_word(sl3, [0, 1, 2, 0])
    assert not is_reduced_word(sl3, [1, 1])
    assert not is_reduced_word(sl3, [1, 2, 1, 2])


@given(elements(max_length=5), elements(max_length=5))
@settings(max_examples=60, deadline=None)
def test_comparison_agrees_with_interval(x, w):
    intervals = BruhatIntervals()
    assert bruhat_leq(x, w) == (x in intervals.lower_interval(w))
    assert bruhat_leq(x, w, intervals) == bruhat_leq(x, w)


@given(elements(max_length=5))
@settings(max_examples=40, deadline=None)
def test_interval_is_subword_products(w):
    interval = BruhatIntervals().lower_interval(w)
    assert interval == subword_products(w.datum, w.reduced_word())
    assert all(x.length <= w.length for x in interval)
