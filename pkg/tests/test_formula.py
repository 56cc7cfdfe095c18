"""Formula trees: evaluation, size, shift, scopes, structural equality."""

import pytest
from hypothesis import given
import hypothesis.strategies as st

from dmaxsat import FALSE, TRUE, And, Formula, Not, Or, ScopeError, Var, and_all, or_all
from dmaxsat.formula import _Const

from strategies import formulas


def test_evaluate_truth_table_basics():
    conj = Formula(And(Var(1), Var(2)), 2)
    assert conj.evaluate([True, True]) is True
    assert conj.evaluate([True, False]) is False

    contradiction = Formula(And(Var(1), Not(Var(1))), 1)
    assert contradiction.evaluate([True]) is False
    assert contradiction.evaluate([False]) is False

    disj = Formula(Or(Var(1), Var(2)), 3)
    assert disj.evaluate([False, True, False]) is True
    assert disj.evaluate([False, False, True]) is False


def test_evaluate_rejects_wrong_length():
    f = Formula(Var(1), 2)
    with pytest.raises(ScopeError):
        f.evaluate([True])
    with pytest.raises(ScopeError):
        f.evaluate([True, False, True])


def test_size_counts_operators_only():
    assert Formula(Var(1), 1).size() == 0
    assert Formula(Not(Var(1)), 1).size() == 1
    assert Formula(And(Or(Var(1), Not(Var(2))), Var(3)), 3).size() == 3
    assert Formula(TRUE, 4).size() == 0


@given(formulas(max_scope=5), formulas(max_scope=5))
def test_size_is_monotone_under_composition(f, g):
    assert And(f.node, g.node).ops == f.size() + g.size() + 1
    assert Or(f.node, g.node).ops == f.size() + g.size() + 1
    assert Not(f.node).ops == f.size() + 1


def test_shift_examples():
    assert Formula(Var(1), 1).shift(2) == Formula(Var(3), 3)
    f = Formula(Or(Var(1), Var(2)), 2)
    assert f.shift(0) == f
    assert Formula(Not(Var(2)), 2).shift(3) == Formula(Not(Var(5)), 5)


def _same_shape(a, b, offset):
    if type(a) is not type(b):
        return False
    if type(a) is _Const:
        return a.value == b.value
    if type(a) is Var:
        return b.index == a.index + offset
    if type(a) is Not:
        return _same_shape(a.child, b.child, offset)
    return _same_shape(a.left, b.left, offset) and _same_shape(a.right, b.right, offset)


@given(formulas(max_scope=6), st.integers(0, 5))
def test_shift_preserves_size_and_shape(f, offset):
    shifted = f.shift(offset)
    assert shifted.size() == f.size()
    assert shifted.scope == f.scope + offset
    assert _same_shape(f.node, shifted.node, offset)


def test_shift_rejects_negative_offset():
    with pytest.raises(ScopeError):
        Formula(Var(1), 1).shift(-1)


def test_scope_validation():
    with pytest.raises(ScopeError):
        Formula(Var(3), 2)
    with pytest.raises(ScopeError):
        Formula(TRUE, -1)
    with pytest.raises(ScopeError):
        Var(0)
    # scope may exceed the highest occurring variable
    Formula(Var(1), 10)


def test_structural_equality_and_hash():
    a = Formula(And(Var(1), Not(Var(2))), 2)
    b = Formula(And(Var(1), Not(Var(2))), 2)
    assert a == b
    assert hash(a) == hash(b)
    assert a != Formula(And(Var(1), Not(Var(2))), 3)
    assert a != Formula(And(Not(Var(2)), Var(1)), 2)


def test_fold_helpers():
    items = [Var(1), Var(2), Var(3)]
    assert and_all(items) == And(Var(1), And(Var(2), Var(3)))
    assert or_all(items) == Or(Var(1), Or(Var(2), Var(3)))
    assert and_all([]) == TRUE
    assert or_all([]) == FALSE
    assert and_all([Var(2)]) == Var(2)


def _truth_table_eval(node, values):
    kind = type(node)
    if kind is _Const:
        return node.value
    if kind is Var:
        return values[node.index]
    if kind is Not:
        return not _truth_table_eval(node.child, values)
    if kind is And:
        return _truth_table_eval(node.left, values) and _truth_table_eval(
            node.right, values
        )
    return _truth_table_eval(node.left, values) or _truth_table_eval(node.right, values)


@given(formulas(max_scope=4))
def test_evaluate_matches_truth_table_recomputation(f):
    for mask in range(1 << f.scope):
        assignment = [bool((mask >> i) & 1) for i in range(f.scope)]
        values = {i + 1: assignment[i] for i in range(f.scope)}
        assert f.evaluate(assignment) == _truth_table_eval(f.node, values)


@given(formulas(max_scope=6))
def test_negate_flips_every_assignment(f):
    negated = f.negate()
    for mask in range(min(1 << f.scope, 32)):
        assignment = [bool((mask >> i) & 1) for i in range(f.scope)]
        assert negated.evaluate(assignment) == (not f.evaluate(assignment))
