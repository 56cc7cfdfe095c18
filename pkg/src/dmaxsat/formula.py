"""Propositional formulas as immutable operator trees over indexed variables.

A :class:`Formula` couples an operator tree with an explicit scope: the
variable block x1..xn that evaluation and counting range over. The scope may
exceed the highest variable that actually occurs; every unused scope variable
doubles the model count, and the count-shaping gadgets rely on exactly that.

Size means the number of Boolean operators (not/and/or nodes); variables and
constants are free. Gadget constructors build fixed right-folded shapes and
never simplify, so size stays an exact, testable quantity.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence


class ScopeError(ValueError):
    """A variable index or assignment does not fit the declared scope."""


def _join_min(a: int, b: int) -> int:
    # 0 means "no variables"
    if a == 0:
        return b
    if b == 0:
        return a
    return a if a < b else b


class Node:
    """Base class for operator-tree nodes.

    Nodes are immutable after construction and cache their hash, operator
    count and occurring-variable range, so equality tests, size queries and
    scope validation stay cheap on shared subtrees.
    """

    __slots__ = ("hash_", "ops", "min_var", "max_var")

    hash_: int
    ops: int
    min_var: int
    max_var: int

    def __hash__(self) -> int:
        return self.hash_

    def eval_mask(self, mask: int) -> bool:
        """Truth value under the assignment whose bit i-1 is variable i."""
        raise NotImplementedError

    def shifted(self, offset: int) -> "Node":
        """Copy with every variable index raised by ``offset``."""
        raise NotImplementedError

    def restrict(self, var: int, value: bool) -> "Node":
        """Substitute one variable by a constant and fold constants away.

        Count-preserving over any scope: the substituted variable simply no
        longer occurs. Used by the splitting counter.
        """
        raise NotImplementedError

    def substitute(self, fixed: Mapping[int, bool]) -> "Node":
        """Substitute several variables at once, folding constants."""
        raise NotImplementedError


class _Const(Node):
    __slots__ = ("value",)

    def __init__(self, value: bool):
        self.value = value
        self.ops = 0
        self.min_var = 0
        self.max_var = 0
        self.hash_ = hash(("const", value))

    def __repr__(self) -> str:
        return "TRUE" if self.value else "FALSE"

    def __eq__(self, other: object) -> bool:
        return self is other or (type(other) is _Const and other.value == self.value)

    __hash__ = Node.__hash__

    def eval_mask(self, mask: int) -> bool:
        return self.value

    def shifted(self, offset: int) -> Node:
        return self

    def restrict(self, var: int, value: bool) -> Node:
        return self

    def substitute(self, fixed: Mapping[int, bool]) -> Node:
        return self


TRUE = _Const(True)
FALSE = _Const(False)


class Var(Node):
    """A propositional variable, identified by its 1-based index."""

    __slots__ = ("index",)

    def __init__(self, index: int):
        if index < 1:
            raise ScopeError(f"variable index must be >= 1, got {index}")
        self.index = index
        self.ops = 0
        self.min_var = index
        self.max_var = index
        self.hash_ = hash(("var", index))

    def __repr__(self) -> str:
        return f"x{self.index}"

    def __eq__(self, other: object) -> bool:
        return self is other or (type(other) is Var and other.index == self.index)

    __hash__ = Node.__hash__

    def eval_mask(self, mask: int) -> bool:
        return bool((mask >> (self.index - 1)) & 1)

    def shifted(self, offset: int) -> Node:
        return Var(self.index + offset) if offset else self

    def restrict(self, var: int, value: bool) -> Node:
        if var != self.index:
            return self
        return TRUE if value else FALSE

    def substitute(self, fixed: Mapping[int, bool]) -> Node:
        value = fixed.get(self.index)
        if value is None:
            return self
        return TRUE if value else FALSE


class Not(Node):
    """Negation."""

    __slots__ = ("child",)

    def __init__(self, child: Node):
        self.child = child
        self.ops = child.ops + 1
        self.min_var = child.min_var
        self.max_var = child.max_var
        self.hash_ = hash(("not", child.hash_))

    def __repr__(self) -> str:
        return f"Not({self.child!r})"

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        return (
            type(other) is Not
            and other.hash_ == self.hash_
            and other.child == self.child
        )

    __hash__ = Node.__hash__

    def eval_mask(self, mask: int) -> bool:
        return not self.child.eval_mask(mask)

    def shifted(self, offset: int) -> Node:
        return Not(self.child.shifted(offset)) if offset else self

    def restrict(self, var: int, value: bool) -> Node:
        if var < self.min_var or var > self.max_var:
            return self
        child = self.child.restrict(var, value)
        if child is self.child:
            return self
        if child is TRUE:
            return FALSE
        if child is FALSE:
            return TRUE
        return Not(child)

    def substitute(self, fixed: Mapping[int, bool]) -> Node:
        child = self.child.substitute(fixed)
        if child is self.child:
            return self
        if child is TRUE:
            return FALSE
        if child is FALSE:
            return TRUE
        return Not(child)


class And(Node):
    """Binary conjunction."""

    __slots__ = ("left", "right")

    def __init__(self, left: Node, right: Node):
        self.left = left
        self.right = right
        self.ops = left.ops + right.ops + 1
        self.min_var = _join_min(left.min_var, right.min_var)
        self.max_var = left.max_var if left.max_var > right.max_var else right.max_var
        self.hash_ = hash(("and", left.hash_, right.hash_))

    def __repr__(self) -> str:
        return f"And({self.left!r}, {self.right!r})"

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        return (
            type(other) is And
            and other.hash_ == self.hash_
            and other.left == self.left
            and other.right == self.right
        )

    __hash__ = Node.__hash__

    def eval_mask(self, mask: int) -> bool:
        return self.left.eval_mask(mask) and self.right.eval_mask(mask)

    def shifted(self, offset: int) -> Node:
        if not offset:
            return self
        return And(self.left.shifted(offset), self.right.shifted(offset))

    def restrict(self, var: int, value: bool) -> Node:
        if var < self.min_var or var > self.max_var:
            return self
        left = self.left.restrict(var, value)
        if left is FALSE:
            return FALSE
        right = self.right.restrict(var, value)
        if right is FALSE:
            return FALSE
        if left is TRUE:
            return right
        if right is TRUE:
            return left
        if left is self.left and right is self.right:
            return self
        return And(left, right)

    def substitute(self, fixed: Mapping[int, bool]) -> Node:
        left = self.left.substitute(fixed)
        if left is FALSE:
            return FALSE
        right = self.right.substitute(fixed)
        if right is FALSE:
            return FALSE
        if left is TRUE:
            return right
        if right is TRUE:
            return left
        if left is self.left and right is self.right:
            return self
        return And(left, right)


class Or(Node):
    """Binary disjunction."""

    __slots__ = ("left", "right")

    def __init__(self, left: Node, right: Node):
        self.left = left
        self.right = right
        self.ops = left.ops + right.ops + 1
        self.min_var = _join_min(left.min_var, right.min_var)
        self.max_var = left.max_var if left.max_var > right.max_var else right.max_var
        self.hash_ = hash(("or", left.hash_, right.hash_))

    def __repr__(self) -> str:
        return f"Or({self.left!r}, {self.right!r})"

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        return (
            type(other) is Or
            and other.hash_ == self.hash_
            and other.left == self.left
            and other.right == self.right
        )

    __hash__ = Node.__hash__

    def eval_mask(self, mask: int) -> bool:
        return self.left.eval_mask(mask) or self.right.eval_mask(mask)

    def shifted(self, offset: int) -> Node:
        if not offset:
            return self
        return Or(self.left.shifted(offset), self.right.shifted(offset))

    def restrict(self, var: int, value: bool) -> Node:
        if var < self.min_var or var > self.max_var:
            return self
        left = self.left.restrict(var, value)
        if left is TRUE:
            return TRUE
        right = self.right.restrict(var, value)
        if right is TRUE:
            return TRUE
        if left is FALSE:
            return right
        if right is FALSE:
            return left
        if left is self.left and right is self.right:
            return self
        return Or(left, right)

    def substitute(self, fixed: Mapping[int, bool]) -> Node:
        left = self.left.substitute(fixed)
        if left is TRUE:
            return TRUE
        right = self.right.substitute(fixed)
        if right is TRUE:
            return TRUE
        if left is FALSE:
            return right
        if right is FALSE:
            return left
        if left is self.left and right is self.right:
            return self
        return Or(left, right)


def and_all(nodes: Iterable[Node]) -> Node:
    """Right-folded conjunction chain; the empty chain folds to TRUE."""
    items = list(nodes)
    if not items:
        return TRUE
    out = items[-1]
    for node in reversed(items[:-1]):
        out = And(node, out)
    return out


def or_all(nodes: Iterable[Node]) -> Node:
    """Right-folded disjunction chain; the empty chain folds to FALSE."""
    items = list(nodes)
    if not items:
        return FALSE
    out = items[-1]
    for node in reversed(items[:-1]):
        out = Or(node, out)
    return out


@dataclass(frozen=True)
class Formula:
    """An operator tree together with its declared variable scope.

    The scope is explicit rather than inferred from the highest occurring
    variable: counting always ranges over all scope variables, so a scope-3
    formula mentioning only x1 has twice the models of its scope-2 twin.
    """

    node: Node
    scope: int

    def __post_init__(self) -> None:
        if self.scope < 0:
            raise ScopeError(f"scope must be nonnegative, got {self.scope}")
        if self.node.max_var > self.scope:
            raise ScopeError(
                f"variable x{self.node.max_var} exceeds declared scope {self.scope}"
            )

    def size(self) -> int:
        """Number of Boolean operators (not/and/or nodes) in the tree."""
        return self.node.ops

    def evaluate(self, assignment: Sequence[bool]) -> bool:
        """Truth value under ``assignment``, where position k-1 holds variable k."""
        if len(assignment) != self.scope:
            raise ScopeError(
                f"assignment has {len(assignment)} values for scope {self.scope}"
            )
        mask = 0
        for position, bit in enumerate(assignment):
            if bit:
                mask |= 1 << position
        return self.node.eval_mask(mask)

    def shift(self, offset: int) -> "Formula":
        """Relocate every variable index upward by ``offset``, widening the scope.

        Pure index relocation: the freed low block x1..x_offset is left
        unconstrained, so callers wanting an exact count contract must
        conjoin their own constraints on it.
        """
        if offset < 0:
            raise ScopeError(f"shift offset must be nonnegative, got {offset}")
        if offset == 0:
            return self
        return Formula(self.node.shifted(offset), self.scope + offset)

    def negate(self) -> "Formula":
        """The complement formula over the same scope."""
        return Formula(Not(self.node), self.scope)
