import pytest
from hypothesis import given, settings

from affine_weyl.element_grammar import format_element, parse_element
from affine_weyl.errors import ElementSyntaxError
from affine_weyl.finite_weyl import length_zero_elements
from affine_weyl.group_element import from_letters, identity, pi_power
from affine_weyl.root_datum import parse_datum
from conftest import elements


@pytest.mark.parametrize("text", ["", "  ", "e", "id", "s1 s1", "pi^4"])
def test_identity_forms(sl4, text):
    assert parse_element(text, sl4).is_identity


def test_generator_spellings(sl3):
    expected = from_letters(sl3, [1, 2, 0])
    for text in ("s1 s2 s0", "s_1 s_2 s_0", "s_{1} s_{2} s_{0}", "s1*s2*s0", "s1s2s0"):
        assert parse_element(text, sl3) == expected


def test_pi_exponents(sl4):
    pi = pi_power(sl4, 1)
    assert parse_element("pi", sl4) == pi
    assert parse_element("pi^{-1}", sl4) == pi.inverse()
    assert parse_element("pi^6", sl4) == pi_power(sl4, 2)


def test_window_literal(sl4):
    assert parse_element("[1,3,4,6]", sl4) == parse_element("pi s0", sl4)
    assert parse_element("[5, 2, 4, 7]", sl4) == parse_element("pi^2 s2 s0 s1", sl4)


def test_formatting(sl4):
    assert format_element(identity(sl4)) == "e"
    assert format_element(pi_power(sl4, 1)) == "pi"
    assert format_element(from_letters(sl4, [1])) == "s1"
    assert format_element(pi_power(sl4, 2)) == "pi^2"


@pytest.mark.parametrize("text,position", [
    ("s5", 0),
    ("s1 ?", 3),
    ("s1 [1,2,3]", 3),
    ("[1,2]", 0),
    ("pi[1,x]", 0),
])
def test_syntax_errors(sl3, text, position):
    with pytest.raises(ElementSyntaxError) as info:
        parse_element(text, sl3)
    assert info.value.position == position


def test_window_of_wrong_length_is_rejected(sl3):
    with pytest.raises(ElementSyntaxError):
        parse_element("[1,2,3,4]", sl3)


def test_non_type_a_pi_tokens():
    datum = parse_datum("cartan:[[2,-1],[-2,2]]")
    with pytest.raises(ElementSyntaxError):
        parse_element("pi^1", datum)
    with pytest.raises(ElementSyntaxError):
        parse_element("[1,2]", datum)
    for p in length_zero_elements(datum):
        assert parse_element(format_element(p), datum) == p


@given(elements("SL:3", max_length=8))
@settings(max_examples=40, deadline=None)
def test_normal_form_parses_back(g):
    assert parse_element(format_element(g), g.datum) == g


@given(elements("GL:3", max_length=6))
@settings(max_examples=30, deadline=None)
def test_gl_normal_form_parses_back(g):
    assert parse_element(format_element(g), g.datum) == g
