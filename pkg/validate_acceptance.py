#!/usr/bin/env python3
"""
Acceptance Validation Script
Runs the desk-scale acceptance checks: primitive tables, primitivity criteria, Lusztig's identity,
the lowest-cell factorization, structure coefficients, reducedness, the SL_5 tables, KL well-formedness
and uniqueness of cell factorizations.
"""

import logging
import sys
import time
from itertools import product
from typing import Any, Callable, Dict, List, Tuple

import numpy as np

from affine_weyl.bruhat import elements_up_to_length
from affine_weyl.lattice import vec_add
from affine_weyl.root_datum import parse_datum
from affine_weyl.type_a import window_of
from bernstein_characters.bernstein import verify_lusztig
from bernstein_characters.weights import Weight
from hecke_algebra.hecke_element import T
from hecke_algebra.kl_basis import KLCache, lattice_check
from primitive_cells.lowest_cell import CellFactorization, lowest_cell_factorize
from primitive_cells.primitive_elements import enumerate_primitive, is_primitive, is_primitive_word, primitive_table
from verifier.cell_enumeration import enumerate_lowest_cell
from verifier.factorization_check import verify_factorization
from verifier.golden_tables import SL4_PRIMITIVE
from verifier.lemma_suite import check_golden_tables, check_reduced_lemma, check_structure_coefficients

logger = logging.getLogger(__name__)

SEED = 0
RANDOM_PAIRS = 500
RANDOM_WORD_LENGTH = 5

# (selector, max length, bound on lambda coordinates) for the factorization run
FACTORIZATION_RUNS = [("SL:2", 10, None), ("SL:3", 8, 2)]

# shared with the well-formedness and uniqueness checks
CACHES: Dict[str, KLCache] = {}
CELLS: Dict[str, List[CellFactorization]] = {}


def _cache(selector: str) -> KLCache:
    return CACHES.setdefault(selector, KLCache())


def check_primitive_table() -> Tuple[bool, str]:
    table = primitive_table(parse_datum("SL:4"))
    published = {window for _, window in SL4_PRIMITIVE}
    found = {tuple(int(c) for c in w.split()) for w in table["window"]}
    words = set(table["lifted_word"])
    ok = len(table) == 24 and found == published and words == {word for word, _ in SL4_PRIMITIVE}
    return ok, f"{len(table)} rows, {len(found & published)} windows and {len(words)} words match"


def check_primitive_criteria() -> Tuple[bool, str]:
    disagreements = 0
    checked = 0
    for selector, max_len in [("SL:3", 8), ("SL:4", 6)]:
        datum = parse_datum(selector)
        for w in elements_up_to_length(datum, max_len):
            checked += 1
            if is_primitive(w) != is_primitive_word(window_of(w).entries, datum.size):
                disagreements += 1
                logger.warning(f"primitivity criteria disagree at {w}")
    return disagreements == 0, f"{checked} elements, {disagreements} disagreements"


def check_lusztig() -> Tuple[bool, str]:
    failures = []
    weights = [Weight(parse_datum("SL:2"), (c,)) for c in range(4)]
    sl3 = parse_datum("SL:3")
    weights += [Weight(sl3, c) for c in product(range(3), repeat=2)]
    for lam in weights:
        if not verify_lusztig(lam, _cache(lam.datum.selector)):
            failures.append(f"{lam.datum.selector} {lam}")
    return not failures, f"{len(weights)} weights" + (f", failures: {failures}" if failures else "")


def check_factorizations() -> Tuple[bool, str]:
    details = []
    ok = True
    for selector, max_len, max_coord in FACTORIZATION_RUNS:
        datum = parse_datum(selector)
        cache = _cache(selector)
        cell = enumerate_lowest_cell(datum, max_len, max_coord)
        CELLS[selector] = cell
        statuses = [verify_factorization(cf.w, cache, factorization=cf).status for cf in cell]
        matched = statuses.count("match")
        ok = ok and matched == len(statuses)
        details.append(f"{selector} length <= {max_len}: {matched}/{len(statuses)} match")
    return ok, "; ".join(details)


def check_structure_positivity() -> Tuple[bool, str]:
    result = check_structure_coefficients(parse_datum("SL:3"), np.random.default_rng(SEED), RANDOM_PAIRS, RANDOM_WORD_LENGTH)
    return result.passed, f"{result.checked} pairs, {len(result.failures)} failures"


def check_reducedness() -> Tuple[bool, str]:
    result = check_reduced_lemma(parse_datum("SL:3"), np.random.default_rng(SEED), RANDOM_PAIRS, RANDOM_WORD_LENGTH)
    return result.passed, f"{result.checked} pairs, {len(result.failures)} failures"


def check_sl5_tables() -> Tuple[bool, str]:
    results = check_golden_tables()
    failures = [f for r in results for f in r.failures]
    return not failures, f"{sum(r.checked for r in results)} assertions" + (f", failures: {failures[:3]}" if failures else "")


def check_kl_records() -> Tuple[bool, str]:
    checked = 0
    bad = []
    for cache in CACHES.values():
        for w, record in cache.records.items():
            checked += 1
            try:
                record.check(cache.bars)
            except Exception as e:
                bad.append(f"{w}: {e}")
                continue
            if lattice_check(record.element()) != (True, T(w)):
                bad.append(f"{w}: lattice check")
    if not checked:
        return False, "no KL records; run the Lusztig and factorization checks first"
    return not bad, f"{checked} records" + (f", failures: {bad[:3]}" if bad else "")


def check_uniqueness() -> Tuple[bool, str]:
    checked = 0
    bad = []
    for selector, cell in CELLS.items():
        datum = parse_datum(selector)
        primitive = enumerate_primitive(datum)
        varpi = datum.fundamental_weights[0]
        for cf in cell:
            checked += 1
            if lowest_cell_factorize(cf.w) != cf:
                bad.append(f"{cf.w}: re-derivation differs")
            other = next(p for p in primitive if p != cf.v1)
            mutations = [cf.with_changes(lam=vec_add(cf.lam, varpi)), cf.with_changes(v1=other)]
            if any(m.is_valid() for m in mutations):
                bad.append(f"{cf.w}: a mutated factorization is still valid")
    if not checked:
        return False, "no cell elements; run the factorization check first"
    return not bad, f"{checked} factorizations" + (f", failures: {bad[:3]}" if bad else "")


CRITERIA: List[Tuple[str, Callable[[], Tuple[bool, str]]]] = [
    ("SL_4 primitive table", check_primitive_table),
    ("Root criterion vs window criterion", check_primitive_criteria),
    ("Lusztig factorization", check_lusztig),
    ("Lowest-cell factorization", check_factorizations),
    ("Structure-coefficient positivity", check_structure_positivity),
    ("Reduced factorization criterion", check_reducedness),
    ("SL_5 tables", check_sl5_tables),
    ("KL well-formedness", check_kl_records),
    ("Uniqueness of cell factorizations", check_uniqueness),
]


def run_criterion(name: str, check: Callable[[], Tuple[bool, str]]) -> Dict[str, Any]:
    print(f"Checking {name}...")
    started = time.perf_counter()
    try:
        ok, detail = check()
    except Exception as e:
        ok, detail = False, f"{type(e).__name__}: {e}"
    return {"name": name, "ok": ok, "detail": detail, "seconds": time.perf_counter() - started}


def main() -> bool:
    logging.basicConfig(level=logging.WARNING, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")

    print("=" * 80)
    print("AFFINE KL ACCEPTANCE VALIDATION")
    print("=" * 80)
    print()

    results = []
    for name, check in CRITERIA:
        result = run_criterion(name, check)
        results.append(result)
        symbol = "✓" if result["ok"] else "✗"
        print(f"  {symbol} {name}: {result['detail']} ({result['seconds']:.1f}s)")
        print()

    passed = sum(1 for r in results if r["ok"])
    print("=" * 80)
    print("VALIDATION SUMMARY")
    print("=" * 80)
    print(f"Criteria checked: {len(results)}")
    print(f"Passed: {passed}")
    print(f"Failed: {len(results) - passed}")
    print(f"Total time: {sum(r['seconds'] for r in results):.1f}s")
    return passed == len(results)


if __name__ == "__main__":
    success = main()
    sys.exit(0 if success else 1)
