import re
from fractions import Fraction

import pytest
from hypothesis import given, settings

from affine_weyl.bruhat import elements_up_to_length
from affine_weyl.element_grammar import parse_element
from affine_weyl.errors import AffineKLError, UnsupportedDatumError
from affine_weyl.finite_weyl import finite_weyl_group, longest_element
from affine_weyl.group_element import from_letters, identity, pi_power, translation
from affine_weyl.lattice import mat_vec
from affine_weyl.root_datum import parse_datum
from affine_weyl.type_a import TypeAWindow, element_of, epsilon_coordinates, from_epsilon_coordinates, pi_lift, window_of
from primitive_cells.boxes import alcove_barycenter, box_of, in_dominant_chamber
from primitive_cells.primitive_elements import (
    enumerate_primitive,
    finite_from_primitive,
    is_primitive,
    is_primitive_factored,
    is_primitive_geometric,
    is_primitive_word,
    primitive_from_finite,
    primitive_table,
)
from verifier.golden_tables import SL4_PRIMITIVE
from conftest import elements


def _published_exponent(word: str) -> int:
    m = re.match(r"pi(?:\^(\d+))?", word)
    if m is None:
        return 0
    return int(m.group(1) or 1)


@pytest.mark.parametrize("selector,count", [("SL:2", 2), ("SL:3", 6), ("SL:4", 24), ("cartan:[[2,-1],[-2,2]]", 8)])
def test_primitive_count(selector, count):
    found = enumerate_primitive(parse_datum(selector))
    assert len(found) == count
    assert len(set(found)) == count
    assert all(is_primitive(w) for w in found)


def test_sl4_windows_reproduce_published_table(sl4):
    windows = {window_of(w).entries for w in enumerate_primitive(sl4)}
    assert windows == {window for _, window in SL4_PRIMITIVE}


@pytest.mark.parametrize("word,window", SL4_PRIMITIVE)
def test_sl4_published_rows(sl4, word, window):
    w = parse_element(word, sl4)
    assert w == element_of(sl4, window)
    assert window_of(w).entries == window
    assert pi_lift(window_of(w)) == _published_exponent(word)
    assert is_primitive(w)
    assert is_primitive_word(window)


def test_primitive_table(sl4):
    table = primitive_table(sl4)
    assert len(table) == 24
    assert list(table.columns) == ["word", "length", "lifted_word", "window", "pi_lift"]
    assert set(table["lifted_word"]) == {word for word, _ in SL4_PRIMITIVE}
    assert set(table["window"]) == {" ".join(str(c) for c in window) for _, window in SL4_PRIMITIVE}
    grouped = primitive_table(sl4, group_by_pi=True)
    assert list(grouped["pi_lift"]) == sorted(grouped["pi_lift"])
    assert grouped["pi_lift"].max() == 6


def test_primitive_table_windows_start_in_first_block(sl4):
    for row in primitive_table(sl4).itertuples():
        entries = tuple(int(c) for c in row.window.split())
        assert 1 <= entries[0] <= 4
        assert _published_exponent(row.lifted_word) == row.pi_lift == pi_lift(TypeAWindow(entries))



def test_primitive_table_without_windows():
    table = primitive_table(parse_datum("cartan:[[2,-1],[-2,2]]"))
    assert len(table) == 8
    assert list(table.columns) == ["word", "length"]


def test_small_examples(sl4):
    assert is_primitive(identity(sl4))
    assert is_primitive(pi_power(sl4, 1))
    assert not is_primitive(from_letters(sl4, [1]))
    assert is_primitive_word((1, 2, 4, 7))
    assert not is_primitive_word((2, 1, 3, 4))
    with pytest.raises(ValueError):
        is_primitive_word((1, 2, 3), n=4)


def test_certificate_extremes(sl3):
    w0 = longest_element(sl3)
    cert = primitive_from_finite(identity(sl3))
    assert cert.J == ()
    assert cert.lam == (1, 1)
    assert cert.w == translation(sl3, (1, 1)) * w0
    top = primitive_from_finite(w0)
    assert top.J == (1, 2)
    assert top.lam == (0, 0)
    assert top.w.is_identity


def test_sl5_descent_example(sl5):
    v = element_of(sl5, (5, 2, 3, 1, 4))
    cert = primitive_from_finite(v)
    assert cert.J == (1, 3)
    assert cert.lam_fundamental == (0, 1, 0, 1)
    assert epsilon_coordinates(sl5, cert.lam) == (2, 2, 1, 1, 0)
    assert mat_vec(v.fin, cert.lam) == from_epsilon_coordinates(sl5, (1, 2, 1, 0, 2))
    assert cert.reassemble() == cert.w
    assert is_primitive_word(window_of(cert.w))


def test_bijection_with_finite_weyl_group(sl4):
    for v in finite_weyl_group(sl4):
        cert = primitive_from_finite(v)
        assert is_primitive(cert.w)
        assert finite_from_primitive(cert.w).v == v


def test_rejections(sl3, gl3):
    with pytest.raises(AffineKLError):
        finite_from_primitive(from_letters(sl3, [1]))
    with pytest.raises(AffineKLError):
        primitive_from_finite(from_letters(sl3, [0]))
    with pytest.raises(UnsupportedDatumError):
        is_primitive(identity(gl3))
    with pytest.raises(UnsupportedDatumError):
        enumerate_primitive(gl3)


@pytest.mark.parametrize("selector,max_length", [("SL:3", 6), ("SL:4", 4)])
def test_criteria_agree(selector, max_length):
    datum = parse_datum(selector)
    for w in elements_up_to_length(datum, max_length):
        expected = is_primitive(w)
        assert is_primitive_geometric(w) == expected
        assert is_primitive_factored(w) == expected
        assert is_primitive_word(window_of(w)) == expected


@pytest.mark.slow
@pytest.mark.parametrize("selector,max_length", [("SL:3", 8), ("SL:4", 6)])
def test_word_criterion_at_scale(selector, max_length):
    datum = parse_datum(selector)
    for w in elements_up_to_length(datum, max_length):
        assert is_primitive_word(window_of(w)) == is_primitive(w)


def test_boxes(sl3):
    assert alcove_barycenter(sl3) == (Fraction(1, 3), Fraction(1, 3))
    assert box_of(identity(sl3)) == (0, 0)
    assert box_of(longest_element(sl3)) == (-1, -1)
    assert box_of(translation(sl3, (2, -1))) == (2, -1)
    assert in_dominant_chamber(identity(sl3))
    assert not in_dominant_chamber(from_letters(sl3, [1]))


@given(elements("SL:3", max_length=7))
@settings(max_examples=50, deadline=None)
def test_dominant_chamber_means_minimal_in_coset(w):
    minimal = not any(w.left_descent(i) for i in w.datum.finite_indices)
    assert in_dominant_chamber(w) == minimal
