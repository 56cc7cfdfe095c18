"""Counting engines: oracle behavior, equivalence, and threshold checks."""

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from dmaxsat import (
    FALSE,
    TRUE,
    And,
    Formula,
    Not,
    Or,
    ScopeLimitError,
    Var,
    count_bruteforce,
    count_fast,
    parse_dimacs,
    threshold_check,
)

from strategies import formulas


def test_bruteforce_basics():
    assert count_bruteforce(Formula(TRUE, 3)) == 8
    assert count_bruteforce(Formula(And(Var(1), Not(Var(1))), 5)) == 0
    assert count_bruteforce(Formula(Or(Var(1), Var(2)), 2)) == 3
    assert count_bruteforce(Formula(TRUE, 0)) == 1
    assert count_bruteforce(Formula(FALSE, 0)) == 0


def test_bruteforce_refuses_above_limit():
    big = Formula(Var(1), 30)
    with pytest.raises(ScopeLimitError, match="limit of 24"):
        count_bruteforce(big)
    with pytest.raises(ScopeLimitError, match="limit of 4"):
        count_bruteforce(Formula(Var(1), 5), limit=4)
    assert count_bruteforce(Formula(Var(1), 5), limit=5) == 16


def test_fast_basics():
    f = parse_dimacs("p cnf 3 2\n1 2 0\n-1 3 0\n")
    assert count_fast(f) == 4
    assert count_fast(Formula(Var(1), 10)) == 512
    assert count_fast(Formula(TRUE, 0)) == 1
    assert count_fast(Formula(FALSE, 7)) == 0


def test_fast_handles_unfolded_constant_trees():
    # operator trees that are constant without mentioning any variable
    assert count_fast(Formula(Not(TRUE), 3)) == 0
    assert count_fast(Formula(And(TRUE, Or(FALSE, TRUE)), 2)) == 4
    assert count_fast(Formula(Or(Var(2), And(TRUE, TRUE)), 3)) == 8
    assert count_fast(Formula(And(Var(1), Not(FALSE)), 4)) == 8


@given(formulas(max_scope=8))
def test_fast_equals_bruteforce(f):
    assert count_fast(f) == count_bruteforce(f)


@given(formulas(max_scope=6), st.integers(1, 4))
def test_scope_scaling(f, extra):
    widened = Formula(f.node, f.scope + extra)
    assert count_bruteforce(widened) == count_bruteforce(f) << extra
    assert count_fast(widened) == count_fast(f) << extra


@given(formulas(max_scope=7))
def test_negation_complement(f):
    assert count_fast(f.negate()) == (1 << f.scope) - count_fast(f)


@given(formulas(max_scope=4), formulas(max_scope=4))
def test_de_morgan_counts(f, g):
    scope = max(f.scope, g.scope)
    a, b = f.node, g.node
    lhs = Formula(Not(And(a, b)), scope)
    rhs = Formula(Or(Not(a), Not(b)), scope)
    assert count_fast(lhs) == count_fast(rhs)


def test_threshold_basics():
    f = Formula(Or(Var(1), Var(2)), 2)
    assert threshold_check(f, 3) is True
    assert threshold_check(f, 4) is False
    assert threshold_check(f, 0) is True
    assert threshold_check(Formula(FALSE, 5), 0) is True
    assert threshold_check(Formula(FALSE, 5), 1) is False
    assert threshold_check(Formula(TRUE, 3), 9) is False


@settings(max_examples=60)
@given(formulas(max_scope=6))
def test_threshold_agrees_with_count_for_every_bound(f):
    count = count_bruteforce(f)
    for bound in range((1 << f.scope) + 2):
        assert threshold_check(f, bound) == (count >= bound)
