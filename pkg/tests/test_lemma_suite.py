import numpy as np
import pytest

from affine_weyl.group_element import from_letters
from verifier.lemma_suite import (
    check_golden_tables,
    check_reduced_lemma,
    check_suffix_closure,
    right_factors,
    run_lemma_suite,
)
from verifier.settings import SuiteConfig


def test_golden_tables_reproduce():
    for result in check_golden_tables():
        assert result.passed, result.failures
        assert result.checked > 0


def test_suffix_closure(sl3):
    result = check_suffix_closure(sl3)
    assert result.passed
    assert result.checked >= 6


def test_right_factors(sl3):
    w = from_letters(sl3, [1, 2])
    assert set(right_factors(w)) == {w, from_letters(sl3, [2]), from_letters(sl3, [])}


def test_reduced_lemma_on_gl(gl3):
    result = check_reduced_lemma(gl3, np.random.default_rng(3), 10, 4)
    assert result.passed
    assert result.checked == 10


def test_suite_passes_on_sl3():
    report = run_lemma_suite(SuiteConfig(datum="SL:3", count=4, seed=1))
    assert report["summary"]["failed"] == 0, [r for r in report["results"] if r["failures"]]
    assert report["summary"]["instances"] > 0


def test_suite_is_deterministic():
    config = SuiteConfig(datum="SL:2", count=5, seed=7)
    assert run_lemma_suite(config) == run_lemma_suite(config)


def test_gl_skips_primitive_lemmas():
    report = run_lemma_suite(SuiteConfig(datum="GL:3", count=3))
    assert report["summary"]["failed"] == 0
    skipped = [r["lemma"] for r in report["results"] if r["skipped"]]
    assert "primitive elements are Pi-stable" in skipped


@pytest.mark.slow
def test_suite_on_sl4():
    report = run_lemma_suite(SuiteConfig(datum="SL:4", count=20, seed=0))
    assert report["summary"]["failed"] == 0
