import pytest
from hypothesis import given, settings

from affine_weyl.affine_root import simple_affine_root
from affine_weyl.errors import DatumMismatchError
from affine_weyl.finite_weyl import length_zero_elements, longest_element
from affine_weyl.group_element import from_letters, identity, pi_power, simple_reflection, translation
from affine_weyl.root_datum import parse_datum
from conftest import elements


def test_simple_reflections_are_involutions(sl3):
    for i in sl3.affine_indices:
        s = simple_reflection(sl3, i)
        assert s.length == 1
        assert (s * s).is_identity


def test_braid_relations(sl3):
    for i, j in [(1, 2), (0, 1), (2, 0)]:
        assert from_letters(sl3, [i, j, i]) == from_letters(sl3, [j, i, j])


def test_affine_a1_is_infinite_dihedral(sl2):
    st = from_letters(sl2, [0, 1])
    for k in range(1, 6):
        assert (st ** k).length == 2 * k


def test_longest_element_lengths(sl2, sl3, sl4):
    assert longest_element(sl2).length == 1
    assert longest_element(sl3).length == 3
    assert longest_element(sl4).length == 6


def test_pi_has_length_zero(sl4):
    for k in range(8):
        assert pi_power(sl4, k).length == 0
    assert pi_power(sl4, 4).is_identity


def test_pi_rotates_generators(sl4):
    pi = pi_power(sl4, 1)
    for i in sl4.affine_indices:
        assert pi * simple_reflection(sl4, i) * pi.inverse() == simple_reflection(sl4, (i + 1) % 4)


def test_length_zero_elements(sl3, sl4):
    assert len(length_zero_elements(sl3)) == 3
    assert len(length_zero_elements(sl4)) == 4


def test_translation_lengths(sl3, gl3):
    assert translation(sl3, (1, 0)).length == 2
    assert translation(sl3, (1, 1)).length == 4
    assert translation(sl3, (0, 0)).is_identity
    assert translation(gl3, (1, 0, 0)).length == 2
    assert translation(gl3, (1, 1, 1)).length == 0


def test_gl_pi_exponent(gl3):
    assert translation(gl3, (1, 0, 0)).pi_exp == 1
    assert not translation(gl3, (1, 0, 0)).in_affine_subgroup
    assert simple_reflection(gl3, 0).in_affine_subgroup


def test_simple_affine_root_is_flipped(sl2, sl4):
    for datum in (sl2, sl4):
        for i in datum.affine_indices:
            alpha = simple_affine_root(datum, i)
            assert simple_reflection(datum, i).act_on_root(alpha) == -alpha


def test_inversion_set_of_generator(sl3):
    for i in sl3.affine_indices:
        assert simple_reflection(sl3, i).inversion_set() == [simple_affine_root(sl3, i)]


def test_identity_has_no_descents(sl3):
    e = identity(sl3)
    assert e.left_descents == ()
    assert e.right_descents == ()
    assert simple_reflection(sl3, 0).left_descent(0)


def test_mixed_data_rejected(sl3, sl4):
    with pytest.raises(DatumMismatchError):
        simple_reflection(sl3, 1) * simple_reflection(sl4, 1)


def test_translation_needs_full_coordinates(sl3):
    with pytest.raises(ValueError):
        translation(sl3, (1,))


@given(elements(), elements())
@settings(max_examples=40, deadline=None)
def test_group_axioms(g, h):
    assert (g * h).inverse() == h.inverse() * g.inverse()
    assert (g * g.inverse()).is_identity
    assert g.inverse().length == g.length


@given(elements("SL:4", max_length=7))
@settings(max_examples=40, deadline=None)
def test_reduced_word_evaluates_back(g):
    word = g.reduced_word()
    assert len(word.letters) == g.length
    assert word.evaluate(g.datum) == g
    assert len(g.inversion_set()) == g.length


@given(elements("GL:3", max_length=6))
@settings(max_examples=30, deadline=None)
def test_descents_lower_length(g):
    for i in g.datum.affine_indices:
        assert g.left_descent(i) == (g.left_reflect(i).length < g.length)
        assert g.right_descent(i) == (g.right_reflect(i).length < g.length)


@given(elements("cartan:[[2,-1],[-2,2]]", max_length=6, with_pi=False))
@settings(max_examples=30, deadline=None)
def test_non_type_a_lengths(g):
    assert g.length <= 6
    assert g.reduced_word().evaluate(g.datum) == g
    assert parse_datum("cartan:[[2,-1],[-2,2]]") is g.datum
