import pytest
from hypothesis import given, settings

from affine_weyl.element_grammar import parse_element
from affine_weyl.errors import InvalidWindowError, UnsupportedDatumError
from affine_weyl.group_element import identity, pi_power, simple_reflection
from affine_weyl.root_datum import parse_datum
from affine_weyl.type_a import (
    TypeAWindow,
    balanced_window,
    element_of,
    epsilon_coordinates,
    from_epsilon_coordinates,
    pi_lift,
    window_of,
    windows_equal_mod_shift,
)
from conftest import elements


def test_identity_window(sl4, gl3):
    assert window_of(identity(sl4)).entries == (1, 2, 3, 4)
    assert window_of(identity(gl3)).entries == (1, 2, 3)


def test_pi_window(sl4):
    assert window_of(pi_power(sl4, 1)).entries == (2, 3, 4, 5)


def test_worked_example_window(sl4):
    w = parse_element("pi^2 s2 s0 s1", sl4)
    assert w.length == 3
    assert w == element_of(sl4, (5, 2, 4, 7))
    assert windows_equal_mod_shift(window_of(w).entries, (5, 2, 4, 7), 4)


def test_shifted_windows_name_the_same_sl_element(sl4):
    assert element_of(sl4, (5, 6, 7, 8)).is_identity
    assert element_of(sl4, (1, 3, 4, 6)) == element_of(sl4, (5, 7, 8, 10))


def test_gl_windows_are_not_shift_invariant(gl3):
    assert not element_of(gl3, (4, 5, 6)).is_identity
    assert element_of(gl3, (4, 5, 6)) == pi_power(gl3, 3)


@pytest.mark.parametrize("window", [(1, 1, 3, 4), (1, 2, 3, 5), (), (2, 6, 3, 9)])
def test_invalid_windows(sl4, window):
    with pytest.raises(InvalidWindowError):
        element_of(sl4, window)


def test_window_length_must_match(sl4):
    with pytest.raises(InvalidWindowError):
        element_of(sl4, (1, 2, 3))


def test_windows_need_type_a():
    datum = parse_datum("cartan:[[2,-1],[-2,2]]")
    with pytest.raises(UnsupportedDatumError):
        window_of(identity(datum))


def test_window_descents():
    assert TypeAWindow((5, 2, 4, 7)).right_descents() == [1]
    assert TypeAWindow((1, 2, 3, 8)).right_descents() == [0]


def test_pi_lift(sl4):
    assert pi_lift(window_of(pi_power(sl4, 3))) == 3
    assert pi_lift(TypeAWindow((4, 7, 10, 13))) == 6


def test_simple_reflections_act_on_positions(sl4):
    g = pi_power(sl4, 1) * simple_reflection(sl4, 1)
    assert window_of(g).entries == (3, 2, 4, 5)
    assert element_of(sl4, (2, 3, 5, 4)) != g


@given(elements("SL:4", max_length=8))
@settings(max_examples=50, deadline=None)
def test_sl_windows_start_in_first_block(g):
    assert 1 <= window_of(g).entries[0] <= 4


def test_epsilon_coordinates(sl5):
    assert epsilon_coordinates(sl5, (0, 1, 0, 1)) == (2, 2, 1, 1, 0)
    assert from_epsilon_coordinates(sl5, (2, 2, 1, 1, 0)) == (0, 1, 0, 1)
    assert from_epsilon_coordinates(sl5, (3, 3, 2, 2, 1)) == (0, 1, 0, 1)


@given(elements("SL:4", max_length=8))
@settings(max_examples=50, deadline=None)
def test_window_names_element(g):
    window = window_of(g)
    window.validate()
    assert element_of(g.datum, window) == g
    assert set(window.right_descents()) == set(g.right_descents)


@given(elements("GL:3", max_length=6))
@settings(max_examples=30, deadline=None)
def test_gl_window_names_element(g):
    assert element_of(g.datum, window_of(g)) == g


@given(elements("SL:3", max_length=8))
@settings(max_examples=30, deadline=None)
def test_balanced_window(g):
    window = balanced_window(g)
    shift = sum(w - i for i, w in enumerate(window.entries, start=1)) // 3
    assert 0 <= shift < 3
    assert windows_equal_mod_shift(window.entries, window_of(g).entries, 3)
    assert element_of(g.datum, window) == g
