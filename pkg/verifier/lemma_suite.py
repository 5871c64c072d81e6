"""
Lemma Suite
Seeded random instances of the reducedness, reflection, key-factorization and large-translation lemmas,
plus primitive-element closure properties and the published SL_5 tables
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence

import numpy as np

from affine_weyl.bruhat import bruhat_leq
from affine_weyl.factorizations import is_reduced_pair, is_reduced_pair_by_roots, parabolic_decompose, three_factor
from affine_weyl.finite_weyl import finite_weyl_group, length_zero_elements, longest_element, psi
from affine_weyl.group_element import GroupElement, from_letters, reflection, simple_reflection, translation
from affine_weyl.root_datum import RootDatum, parse_datum
from affine_weyl.type_a import element_of, window_of, windows_equal_mod_shift
from hecke_algebra.hecke_element import T, t_multiply
from hecke_algebra.structure_coefficients import is_positive_xi_polynomial, structure_coeffs_by_subsets
from primitive_cells.primitive_elements import enumerate_primitive, is_primitive

from .golden_tables import SL5_PSI_TABLE, SL5_Y_INVERSE, SL5_Y_PRIME_TABLE, SL5_Z_INVERSE, DescentRow
from .settings import SuiteConfig

logger = logging.getLogger(__name__)

DEFAULT_WORD_LENGTH = 5
LARGENESS_MARGIN = 2


@dataclass
class LemmaResult:
    lemma: str
    checked: int = 0
    failures: List[str] = field(default_factory=list)
    skipped: Optional[str] = None

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, ok: bool, instance: str) -> None:
        self.checked += 1
        if not ok:
            self.failures.append(instance)
            logger.warning(f"{self.lemma} fails at {instance}")

    def to_dict(self) -> Dict[str, Any]:
        return {"lemma": self.lemma, "checked": self.checked, "failures": self.failures, "skipped": self.skipped}


def random_affine_element(datum: RootDatum, rng: np.random.Generator, max_length: int) -> GroupElement:
    """Product of a random word in s_0..s_n (an element of W_a)"""
    size = int(rng.integers(0, max_length + 1))
    letters = [int(i) for i in rng.integers(0, datum.rank + 1, size=size)]
    return from_letters(datum, letters)


def random_element(datum: RootDatum, rng: np.random.Generator, max_length: int) -> GroupElement:
    """A random word times a random length-zero element when Pi is finite"""
    g = random_affine_element(datum, rng, max_length)
    if datum.is_simply_connected:
        pis = length_zero_elements(datum)
        g = pis[int(rng.integers(len(pis)))] * g
    return g


def random_finite(datum: RootDatum, rng: np.random.Generator) -> GroupElement:
    group = finite_weyl_group(datum)
    return group[int(rng.integers(len(group)))]


def large_translation(datum: RootDatum, rng: np.random.Generator, reach: int) -> GroupElement:
    """y^beta with <beta, alpha_i> >= reach + l(w_0) + 2 for every i; reach is the longest element applied to it"""
    threshold = reach + longest_element(datum).length + LARGENESS_MARGIN
    coords = [threshold + int(rng.integers(0, 3)) for _ in datum.finite_indices]
    return translation(datum, datum.from_fundamental(coords))


def check_reduced_lemma(datum: RootDatum, rng: np.random.Generator, count: int, max_length: int) -> LemmaResult:
    """l(xy) = l(x) + l(y) iff x maps y(R_+) cap R_- into R_-"""
    result = LemmaResult("reduced factorization criterion")
    for _ in range(count):
        x = random_element(datum, rng, max_length)
        y = random_element(datum, rng, max_length)
        result.record(is_reduced_pair(x, y) == is_reduced_pair_by_roots(x, y), f"x={x}, y={y}")
    return result


def check_reflection_lemma(datum: RootDatum, rng: np.random.Generator, count: int) -> LemmaResult:
    """
    For a, y in W_f and alpha > 0:
    s_alpha a < a implies (s_alpha a y < a y iff a^{-1} s_alpha a y > y);
    s_alpha a > a implies (s_alpha a y > a y iff a^{-1} s_alpha a y > y).
    """
    result = LemmaResult("reflection descent lemma")
    coroots = datum.positive_coroots
    if not coroots:
        result.skipped = "no positive roots"
        return result
    for _ in range(count):
        a = random_finite(datum, rng)
        y = random_finite(datum, rng)
        alpha = coroots[int(rng.integers(len(coroots)))]
        s = reflection(datum, alpha)
        sa = s * a
        conjugate_up = (a.inverse() * sa * y).length > y.length
        if sa.length < a.length:
            ok = ((sa * y).length < (a * y).length) == conjugate_up
        else:
            ok = ((sa * y).length > (a * y).length) == conjugate_up
        result.record(ok, f"a={a}, y={y}, alpha={alpha}")
    return result


def check_key_factorization(datum: RootDatum, rng: np.random.Generator, count: int, max_length: int) -> List[LemmaResult]:
    """x * w_0 and w_0 * z reduced imply x * w_0 * z reduced; for primitive x also x * w_0 s_i * z"""
    first = LemmaResult("key factorization: x * w_0 * z")
    second = LemmaResult("key factorization: primitive x * w_0 s_i * z")
    w0 = longest_element(datum)
    finite = datum.finite_indices
    primitive = enumerate_primitive(datum) if datum.is_simply_connected else []
    if not primitive:
        second.skipped = f"primitive elements need a simply connected datum, got {datum.selector}"
    for _ in range(count):
        x = parabolic_decompose(random_element(datum, rng, max_length), finite, side="right")[0]
        z = parabolic_decompose(random_element(datum, rng, max_length), finite, side="left")[1]
        first.record((x * w0 * z).length == x.length + w0.length + z.length, f"x={x}, z={z}")
        if primitive:
            p = primitive[int(rng.integers(len(primitive)))]
            for i in finite:
                y = w0.right_reflect(i)
                second.record((p * y * z).length == p.length + y.length + z.length, f"x={p}, y=w_0 s{i}, z={z}")
    return [first, second]


def check_large_translation_lemma(datum: RootDatum, rng: np.random.Generator, count: int, max_length: int) -> List[LemmaResult]:
    """
    For z = u y^beta v large with respect to x in W_a:
    the W_f-part of x z is Psi(x) u; s_0 z < z iff Psi(s_0) z > z;
    with u = id, s_i x z < x z iff Psi(s_i x) < Psi(x) (reversed for i = 0).
    """
    coset = LemmaResult("large translation: W_f-part of x z is Psi(x) u")
    flip = LemmaResult("large translation: s_0 descent flips under Psi")
    descents = LemmaResult("large translation: descents of x z follow Psi(x)")
    if not datum.is_simply_connected:
        for result in (coset, flip, descents):
            result.skipped = f"large translations are built from fundamental weights, unavailable for {datum.selector}"
        return [coset, flip, descents]
    s0 = simple_reflection(datum, 0)
    s_theta = psi(s0)
    for _ in range(count):
        x = random_affine_element(datum, rng, max_length)
        u = random_finite(datum, rng)
        v = random_finite(datum, rng)
        y_beta = large_translation(datum, rng, x.length)
        z = u * y_beta * v
        u_xz, _, v_xz = three_factor(x * z)
        coset.record(u_xz == psi(x) * u and v_xz == v, f"x={x}, z={z}")
        flip.record(((s0 * z).length < z.length) == ((s_theta * z).length > z.length), f"z={z}")
        z_min = y_beta * v
        xz = x * z_min
        for i in datum.affine_indices:
            si = simple_reflection(datum, i)
            goes_down = (si * xz).length < xz.length
            if i == 0:
                expected = psi(si * x).length > psi(x).length
            else:
                expected = psi(si * x).length < psi(x).length
            descents.record(goes_down == expected, f"i={i}, x={x}, z={z_min}")
    return [coset, flip, descents]


def check_exchange_lemma(datum: RootDatum, rng: np.random.Generator, count: int, max_length: int) -> LemmaResult:
    """
    x * w_0 reduced, z = y^beta v large, y in W_f, x = s_{i1} x'.
    When x y z < x' y z, writing x y z = x' y' z' with z' minimal gives y' = Psi(x'^{-1} x y) > y.
    """
    result = LemmaResult("large translation exchange: y' > y")
    if not datum.is_simply_connected:
        result.skipped = f"large translations are built from fundamental weights, unavailable for {datum.selector}"
        return result
    finite = datum.finite_indices
    for _ in range(count):
        x = parabolic_decompose(random_affine_element(datum, rng, max_length), finite, side="right")[0]
        if x.is_identity:
            result.record(True, "x=e")
            continue
        first_letter = x.reduced_word().letters[0]
        x_prime = x.left_reflect(first_letter)
        # the coset statement is applied to x'^-1 x y, of length up to 2 l(x) + l(w_0)
        reach = 2 * x.length + longest_element(datum).length
        z = large_translation(datum, rng, reach) * random_finite(datum, rng)
        y = random_finite(datum, rng)
        if (x * y * z).length >= (x_prime * y * z).length:
            continue
        y_prime, _, _ = three_factor(x_prime.inverse() * x * y * z)
        ok = y_prime == psi(x_prime.inverse() * x * y) and y_prime != y and bruhat_leq(y, y_prime)
        result.record(ok, f"x={x}, y={y}, z={z}, y'={y_prime}")
    return result


def check_pi_stability(datum: RootDatum, rng: np.random.Generator, count: int, max_length: int) -> LemmaResult:
    """w is primitive iff pi w is"""
    result = LemmaResult("primitive elements are Pi-stable")
    if not datum.is_simply_connected:
        result.skipped = f"primitive elements need a simply connected datum, got {datum.selector}"
        return result
    pis = length_zero_elements(datum)
    for w in enumerate_primitive(datum):
        for pi in pis:
            result.record(is_primitive(pi * w), f"pi={pi}, w={w}")
    for _ in range(count):
        g = random_element(datum, rng, max_length)
        pi = pis[int(rng.integers(len(pis)))]
        result.record(is_primitive(g) == is_primitive(pi * g), f"pi={pi}, w={g}")
    return result


def right_factors(w: GroupElement) -> List[GroupElement]:
    """Every y with a reduced factorization w = x * y"""
    seen = {w: None}
    frontier = [w]
    while frontier:
        following = []
        for g in frontier:
            for i in g.left_descents:
                h = g.left_reflect(i)
                if h not in seen:
                    seen[h] = None
                    following.append(h)
        frontier = following
    pis = [g.pi_part for g in seen]
    return list(seen) + [p.inverse() * g for p, g in zip(pis, seen) if not p.is_identity]


def check_suffix_closure(datum: RootDatum) -> LemmaResult:
    """x * y reduced and x y primitive imply y primitive"""
    result = LemmaResult("right factors of primitive elements are primitive")
    if not datum.is_simply_connected:
        result.skipped = f"primitive elements need a simply connected datum, got {datum.selector}"
        return result
    for w in enumerate_primitive(datum):
        for y in right_factors(w):
            if is_reduced_pair(w * y.inverse(), y):
                result.record(is_primitive(y), f"w={w}, y={y}")
    return result


def check_structure_coefficients(datum: RootDatum, rng: np.random.Generator, count: int, max_length: int) -> LemmaResult:
    """Every f_{w1,w2,w3} is a non-negative polynomial in xi of xi-degree equal to its u-degree, and matches the subset expansion"""
    result = LemmaResult("structure coefficients are positive in xi")
    for _ in range(count):
        w1 = random_element(datum, rng, max_length)
        w2 = random_element(datum, rng, max_length)
        product = dict(t_multiply(T(w1), T(w2)).items())
        oracle = {z: c for z, c in structure_coeffs_by_subsets(w1, w2).items() if c}
        ok = product == oracle and all(is_positive_xi_polynomial(c) for c in product.values())
        result.record(ok, f"w1={w1}, w2={w2}")
    return result


def _comparison(current: GroupElement, previous: GroupElement) -> str:
    return "<" if current.length < previous.length else ">"


def _check_rows(result: LemmaResult, rows: Sequence[DescentRow], element: Callable[[GroupElement], GroupElement],
                psi_element: Callable[[GroupElement], GroupElement], datum: RootDatum) -> None:
    n = datum.size
    previous = previous_psi = None
    for row in rows:
        x_inverse = from_letters(datum, row.x_inverse)
        g = element(x_inverse)
        p = psi_element(x_inverse)
        label = "x^-1=" + (" ".join(f"s{i}" for i in row.x_inverse) or "e")
        result.record(windows_equal_mod_shift(window_of(g).entries, row.window, n), f"{label}: window {window_of(g)}")
        result.record(window_of(p).entries == row.psi_window, f"{label}: Psi window {window_of(p)}")
        if previous is not None:
            result.record(_comparison(g, previous) == row.comparison, f"{label}: comparison")
            if row.psi_comparison is not None:
                result.record(_comparison(p, previous_psi) == row.psi_comparison, f"{label}: Psi comparison")
                # comparisons agree exactly when the appended letter is finite
                result.record((row.comparison == row.psi_comparison) == (row.x_inverse[-1] != 0), f"{label}: agreement")
        previous, previous_psi = g, p


def check_golden_tables() -> List[LemmaResult]:
    """Both SL_5 tables row for row"""
    datum = parse_datum("SL:5")
    z_inverse = element_of(datum, SL5_Z_INVERSE)
    y_inverse = element_of(datum, SL5_Y_INVERSE)

    psi_table = LemmaResult("SL_5 table: z^-1 x^-1 against Psi(x^-1)")
    _check_rows(psi_table, SL5_PSI_TABLE, lambda xi: z_inverse * xi, psi, datum)

    y_table = LemmaResult("SL_5 table: z^-1 y^-1 x^-1 and y'")
    _check_rows(y_table, SL5_Y_PRIME_TABLE, lambda xi: z_inverse * y_inverse * xi, lambda xi: psi(y_inverse * xi), datum)
    y = y_inverse.inverse()
    for row in SL5_Y_PRIME_TABLE[1:]:
        label = "x^-1=" + " ".join(f"s{i}" for i in row.x_inverse)
        y_table.record((row.y_prime_inverse is not None) == (row.comparison == "<"), f"{label}: y' present")
        if row.y_prime_inverse is None:
            continue
        x_prime_inverse = from_letters(datum, row.x_inverse[:-1])
        x_inverse = from_letters(datum, row.x_inverse)
        y_prime_inverse = psi(y_inverse * x_inverse * x_prime_inverse.inverse())
        y_table.record(window_of(y_prime_inverse).entries == row.y_prime_inverse, f"{label}: y'^-1 {window_of(y_prime_inverse)}")
        y_prime = y_prime_inverse.inverse()
        y_table.record(y_prime != y and bruhat_leq(y, y_prime), f"{label}: y' > y")
    return [psi_table, y_table]


def run_lemma_suite(config: SuiteConfig) -> Dict[str, Any]:
    """Every lemma check for config.datum plus the SL_5 tables; identical configs give identical reports"""
    datum = parse_datum(config.datum)
    rng = np.random.default_rng(config.seed)
    max_length = config.max_len or DEFAULT_WORD_LENGTH
    count = config.count
    logger.info(f"Running lemma suite on {datum.selector}: {count} instances per lemma, seed {config.seed}")

    results: List[LemmaResult] = []
    if datum.rank == 0:
        results.append(LemmaResult("trivial group", skipped=f"{datum.selector} has no simple reflections"))
    else:
        results.append(check_reduced_lemma(datum, rng, count, max_length))
        results.append(check_reflection_lemma(datum, rng, count))
        results.extend(check_key_factorization(datum, rng, count, max_length))
        results.extend(check_large_translation_lemma(datum, rng, count, max_length))
        results.append(check_exchange_lemma(datum, rng, count, max_length))
        results.append(check_pi_stability(datum, rng, count, max_length))
        results.append(check_suffix_closure(datum))
        results.append(check_structure_coefficients(datum, rng, count, max_length))
    results.extend(check_golden_tables())

    failed = sum(1 for r in results if not r.passed)
    return {
        "config": config.to_dict(),
        "results": [r.to_dict() for r in results],
        "summary": {
            "total": len(results),
            "passed": len(results) - failed,
            "failed": failed,
            "instances": sum(r.checked for r in results),
        },
    }
