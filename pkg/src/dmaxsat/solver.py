"""Deciding and maximizing chooser-block counts over split instances.

A split instance partitions a formula's scope into a chooser block x and a
counted block y. The decision problem asks for an x whose y-count reaches a
bound; the optimization problem asks for the x maximizing that count. Both
engines return the lexicographically least qualifying chooser assignment,
which makes differential testing exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .counting import DEFAULT_LIMIT, ScopeLimitError, count_fast
from .formula import Formula


@dataclass(frozen=True)
class SplitInstance:
    """A formula whose scope is split into chooser (x) and counted (y) blocks.

    The two blocks must be disjoint and together cover the scope exactly.
    ``bound``, when present, is the count the chooser must reach.
    """

    formula: Formula
    x_vars: tuple[int, ...]
    y_vars: tuple[int, ...]
    bound: int | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "x_vars", tuple(self.x_vars))
        object.__setattr__(self, "y_vars", tuple(self.y_vars))
        scope = self.formula.scope
        seen: set[int] = set()
        for v in self.x_vars + self.y_vars:
            if not 1 <= v <= scope:
                raise ValueError(f"variable {v} outside scope {scope}")
            if v in seen:
                raise ValueError(f"variable {v} listed twice")
            seen.add(v)
        if len(seen) != scope:
            missing = sorted(set(range(1, scope + 1)) - seen)
            raise ValueError(f"blocks do not cover the scope; missing {missing}")
        if self.bound is not None:
            top = (1 << len(self.y_vars)) + 1
            if not 0 <= self.bound <= top:
                raise ValueError(
                    f"bound {self.bound} outside [0, 2**{len(self.y_vars)} + 1]"
                )


@dataclass(frozen=True)
class Witness:
    """A chooser assignment (aligned with x_vars) and the count it achieves."""

    values: tuple[bool, ...]
    achieved: int


def parse_blocks(declaration: str, scope: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Parse a block declaration like ``x: 1 3 / y: 2 4`` into the two blocks.

    Variables not listed anywhere default to the y block; a variable listed
    twice is an error. Either segment may be omitted or left empty.
    """
    listed_x: list[int] = []
    listed_y: list[int] = []
    seen: set[int] = set()
    for part in declaration.split("/"):
        part = part.strip()
        if not part:
            continue
        label, sep, rest = part.partition(":")
        label = label.strip()
        if not sep or label not in ("x", "y"):
            raise ValueError(f"malformed block segment {part!r}")
        block = listed_x if label == "x" else listed_y
        for token in rest.split():
            try:
                v = int(token)
            except ValueError:
                raise ValueError(f"bad variable index {token!r}") from None
            if not 1 <= v <= scope:
                raise ValueError(f"variable {v} outside scope {scope}")
            if v in seen:
                raise ValueError(f"variable {v} listed twice")
            seen.add(v)
            block.append(v)
    unlisted = [v for v in range(1, scope + 1) if v not in seen]
    return tuple(listed_x), tuple(listed_y + unlisted)


def count_given_x(instance: SplitInstance, x_assignment: Sequence[bool]) -> int:
    """Models over the y block once the chooser block is pinned."""
    if len(x_assignment) != len(instance.x_vars):
        raise ValueError(
            f"assignment covers {len(x_assignment)} of "
            f"{len(instance.x_vars)} chooser variables"
        )
    fixed = {v: bool(b) for v, b in zip(instance.x_vars, x_assignment)}
    return _count_under(instance, fixed)


def _count_under(instance: SplitInstance, fixed: dict[int, bool]) -> int:
    # the substituted tree no longer mentions the fixed variables, so the
    # full-scope count overshoots by exactly 2**len(fixed)
    restricted = instance.formula.node.substitute(fixed)
    return count_fast(Formula(restricted, instance.formula.scope)) >> len(fixed)


def _lex_assignments(k: int) -> Iterator[tuple[bool, ...]]:
    # leftmost position most significant, False before True: lexicographic
    for mask in range(1 << k):
        yield tuple(bool((mask >> (k - 1 - j)) & 1) for j in range(k))


def _required_bound(instance: SplitInstance) -> int:
    if instance.bound is None:
        raise ValueError("instance carries no bound; set SplitInstance.bound")
    return instance.bound


def _check_limits(instance: SplitInstance, limit: int) -> None:
    if len(instance.x_vars) > limit or len(instance.y_vars) > limit:
        raise ScopeLimitError(
            f"block sizes {len(instance.x_vars)}/{len(instance.y_vars)} exceed "
            f"the enumeration limit of {limit} variables"
        )


def dmax_decide(
    instance: SplitInstance, limit: int = DEFAULT_LIMIT
) -> Witness | None:
    """Lexicographically least chooser reaching the bound, or None.

    Plain enumeration of the chooser block in lexicographic order; the
    reference engine that :func:`dmax_pruned` is tested against.
    """
    bound = _required_bound(instance)
    _check_limits(instance, limit)
    for values in _lex_assignments(len(instance.x_vars)):
        achieved = count_given_x(instance, values)
        if achieved >= bound:
            return Witness(values, achieved)
    return None


def max_count(instance: SplitInstance, limit: int = DEFAULT_LIMIT) -> Witness:
    """The chooser maximizing the y-count; ties go to the lexicographically least."""
    _check_limits(instance, limit)
    best: Witness | None = None
    for values in _lex_assignments(len(instance.x_vars)):
        achieved = count_given_x(instance, values)
        if best is None or achieved > best.achieved:
            best = Witness(values, achieved)
    assert best is not None
    return best


def dmax_pruned(
    instance: SplitInstance, limit: int = DEFAULT_LIMIT
) -> Witness | None:
    """Same contract as :func:`dmax_decide`, with residual-count pruning.

    Depth-first over partial chooser assignments in variable order. At each
    node the count over all still-free variables (unassigned x plus all y)
    is the sum over the free chooser completions of their y-counts, so it
    bounds the best completion from above; a partial assignment whose
    residual count falls below the bound is abandoned wholesale. The leaf
    residual is the achieved count itself, so the first surviving leaf in
    depth-first order is exactly the witness dmax_decide returns.
    """
    bound = _required_bound(instance)
    _check_limits(instance, limit)
    xs = instance.x_vars

    def descend(
        depth: int, fixed: dict[int, bool], values: list[bool]
    ) -> Witness | None:
        residual = _count_under(instance, fixed)
        if residual < bound:
            return None
        if depth == len(xs):
            return Witness(tuple(values), residual)
        for value in (False, True):
            fixed[xs[depth]] = value
            values.append(value)
            found = descend(depth + 1, fixed, values)
            if found is not None:
                return found
            values.pop()
            del fixed[xs[depth]]
        return None

    return descend(0, {}, [])
