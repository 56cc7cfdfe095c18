"""Acceptance suite: every contract at its stated scale, tolerance, and budget.

One test per criterion, each printing a PASS/FAIL line (run with -s to see
them live). All count and size checks are exact; the per-criterion runtime
budgets are asserted alongside.
"""

import random
import time

from dmaxsat import selftest
from dmaxsat.generate import random_formula
from dmaxsat.gadgets import pack_pair, psi_gadget
from dmaxsat.selftest import expected_pack_pair_size, expected_psi_size


def _report(number: int, label: str, ok: bool, cases: int, elapsed: float, budget: float):
    status = "PASS" if ok and elapsed < budget else "FAIL"
    print(
        f"[acceptance {number:02d}] {label}: {status} "
        f"({cases} cases, {elapsed:.1f}s of {budget:.0f}s)"
    )


def _run_suite(number, label, suite, cases, budget, seed):
    rng = random.Random(seed)
    start = time.perf_counter()
    result = suite(rng, cases)
    elapsed = time.perf_counter() - start
    _report(number, label, result.ok, result.cases, elapsed, budget)
    assert result.ok, result.failure
    assert elapsed < budget, f"{label}: {elapsed:.1f}s over the {budget:.0f}s budget"
    return result


def test_c01_pair_packing_law():
    result = _run_suite(1, "pair-packing law", selftest.pair_law, 500, 30.0, 101)
    assert result.cases >= 500


def test_c02_digit_law():
    result = _run_suite(2, "digit law", selftest.digit_law, 200, 30.0, 102)
    assert result.cases >= 200


def test_c03_threshold_formula_law():
    result = _run_suite(
        3, "threshold formula law", selftest.threshold_law, 1, 10.0, 103
    )
    # exhaustive: every (n, c) with n <= 6, 0 <= c <= 2**n
    assert result.cases == sum((1 << n) + 1 for n in range(7))


def test_c04_psi_parabola_law():
    result = _run_suite(4, "psi/parabola law", selftest.psi_law, 1000, 60.0, 104)
    assert result.cases >= 1000


def test_c05_apex_iff():
    result = _run_suite(5, "apex iff", selftest.apex_law, 1, 5.0, 105)
    # exhaustive: every (n, delta, x) with 1 <= n <= 5
    assert result.cases == sum(
        ((1 << n) // 2 + 1) * ((1 << n) + 1) for n in range(1, 6)
    )


def test_c06_equality_to_threshold_equivalence():
    # 100 random formulas, every target in [0, 2**n] for each
    result = _run_suite(
        6, "equality-to-threshold equivalence", selftest.eq_law, 100, 120.0, 106
    )
    assert result.cases >= 100


def test_c07_multi_query_collapse():
    # 50 random base pairs at k=2, n=2: the true vector, all 8 single-digit
    # perturbations, and one random claim vector
    result = _run_suite(7, "multi-query collapse", selftest.combine_law, 50, 120.0, 107)
    assert result.cases == 50 * 10


def test_c08_solver_oracle_equivalence():
    result = _run_suite(
        8, "solver oracle equivalence", selftest.solver_law, 1000, 120.0, 108
    )
    assert result.cases >= 1000


def test_c09_counter_equivalence():
    result = _run_suite(
        9, "counter equivalence", selftest.counter_law, 10_000, 60.0, 109
    )
    assert result.cases >= 10_000


def test_c10_size_linearity():
    # the same exact size formulas asserted inside suites 1-7, swept directly
    rng = random.Random(110)
    start = time.perf_counter()
    cases = 0
    ok = True
    for _ in range(2000):
        m = rng.randint(0, 6)
        n = rng.randint(0, 6)
        f = random_formula(rng, m, 2 * m + 2)
        g = random_formula(rng, n, 2 * n + 2)
        cases += 1
        if pack_pair(f, g).size() != expected_pack_pair_size(f, g):
            ok = False
            break
        delta = rng.randint(0, (1 << m) // 2)
        cases += 1
        if psi_gadget(f, delta).size() != expected_psi_size(f, delta):
            ok = False
            break
    elapsed = time.perf_counter() - start
    _report(10, "size linearity", ok, cases, elapsed, 30.0)
    assert ok
    assert elapsed < 30.0


def test_full_selftest_under_five_minutes(capsys):
    start = time.perf_counter()
    ok = selftest.run_selftest(seed=0, budget=100)
    elapsed = time.perf_counter() - start
    with capsys.disabled():
        print(
            f"[acceptance] full selftest: {'PASS' if ok and elapsed < 300 else 'FAIL'} "
            f"({elapsed:.1f}s of 300s)"
        )
    assert ok
    assert elapsed < 300.0
