from hypothesis import given, settings

from affine_weyl.group_element import from_letters, identity, simple_reflection
from hecke_algebra.hecke_element import T, t_multiply
from hecke_algebra.laurent import ONE, U, U_INV, XI, ZERO
from hecke_algebra.structure_coefficients import (
    is_positive_xi_polynomial,
    structure_coeff,
    structure_coeffs_by_subsets,
    xi_degree,
    xi_form,
    xi_structure_coeffs,
    xi_to_laurent,
)
from conftest import elements


def test_xi_forms():
    assert xi_form(XI * XI + XI * 3) == {2: 1, 1: 3}
    assert xi_form(ONE) == {0: 1}
    assert xi_form(ZERO) == {}
    assert xi_form(U) is None
    assert xi_to_laurent({2: 1, 0: 2}) == XI * XI + 2
    assert xi_degree({}) == 0
    assert xi_degree({3: 1, 1: 2}) == 3


def test_positivity_predicate():
    assert is_positive_xi_polynomial(XI)
    assert is_positive_xi_polynomial(ONE)
    assert is_positive_xi_polynomial(ZERO)
    assert not is_positive_xi_polynomial(-XI)
    assert not is_positive_xi_polynomial(U + U_INV)


def test_generator_squared(sl3):
    s = simple_reflection(sl3, 1)
    assert structure_coeff(s, s, identity(sl3)) == ONE
    assert structure_coeff(s, s, s) == XI
    assert xi_structure_coeffs(s, s) == {identity(sl3): {0: 1}, s: {1: 1}}


def test_longest_square_in_a1(sl2):
    w = from_letters(sl2, [1, 0, 1])
    coefficients = structure_coeffs_by_subsets(w, w)
    assert {z: c for z, c in coefficients.items() if c} == dict(t_multiply(T(w), T(w)).items())


@given(elements(max_length=5), elements(max_length=5))
@settings(max_examples=60, deadline=None)
def test_subset_expansion_matches_product(w1, w2):
    product = dict(t_multiply(T(w1), T(w2)).items())
    oracle = {z: c for z, c in structure_coeffs_by_subsets(w1, w2).items() if c}
    assert product == oracle
    for c in product.values():
        assert is_positive_xi_polynomial(c)
