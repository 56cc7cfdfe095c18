"""Text formats: the s-expression circuit format and DIMACS CNF.

Circuit files carry a ``(scope N)`` header followed by one expression over
the atoms ``true``, ``false``, ``xK`` and the operators ``not``, ``and``,
``or``. Canonical output is strictly binary; the parser also accepts n-ary
``and``/``or`` and folds them to the right, so printing then re-parsing is
the structural identity.
"""

from __future__ import annotations

import re

from .formula import (
    FALSE,
    TRUE,
    And,
    Formula,
    Node,
    Not,
    Or,
    Var,
    _Const,
    and_all,
    or_all,
)


class ParseError(ValueError):
    """Syntax or scope problem in an input file, with its 1-based position."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column


_VAR_ATOM = re.compile(r"x(\d+)")


def _tokenize(text: str) -> list[tuple[str, int, int]]:
    tokens = []
    line, column = 1, 1
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            column = 1
            i += 1
        elif ch in " \t\r":
            column += 1
            i += 1
        elif ch in "()":
            tokens.append((ch, line, column))
            column += 1
            i += 1
        else:
            j = i
            start = column
            while j < n and text[j] not in " \t\r\n()":
                j += 1
                column += 1
            tokens.append((text[i:j], line, start))
            i = j
    return tokens


class _Cursor:
    def __init__(self, tokens: list[tuple[str, int, int]]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> str | None:
        if self.pos < len(self.tokens):
            return self.tokens[self.pos][0]
        return None

    def where(self) -> tuple[int, int]:
        if self.pos < len(self.tokens):
            _, line, column = self.tokens[self.pos]
            return line, column
        if self.tokens:
            _, line, column = self.tokens[-1]
            return line, column + len(self.tokens[-1][0])
        return 1, 1

    def next(self, expected: str | None = None) -> str:
        line, column = self.where()
        if self.pos >= len(self.tokens):
            raise ParseError(
                f"unexpected end of input, expected {expected or 'a token'}",
                line,
                column,
            )
        token = self.tokens[self.pos][0]
        if expected is not None and token != expected:
            raise ParseError(f"expected {expected!r}, got {token!r}", line, column)
        self.pos += 1
        return token

    def fail(self, message: str) -> ParseError:
        line, column = self.where()
        return ParseError(message, line, column)


def parse_circuit(text: str) -> Formula:
    """Parse circuit text into a Formula; errors carry line and column."""
    cursor = _Cursor(_tokenize(text))
    cursor.next("(")
    cursor.next("scope")
    raw = cursor.next()
    if not raw.isdigit():
        raise cursor.fail(f"scope must be a nonnegative integer, got {raw!r}")
    scope = int(raw)
    cursor.next(")")
    node = _parse_expr(cursor, scope)
    if cursor.peek() is not None:
        raise cursor.fail(f"unexpected trailing input {cursor.peek()!r}")
    return Formula(node, scope)


def _parse_expr(cursor: _Cursor, scope: int) -> Node:
    token = cursor.peek()
    if token is None:
        raise cursor.fail("unexpected end of input, expected a formula")
    if token != "(":
        cursor.next()
        if token == "true":
            return TRUE
        if token == "false":
            return FALSE
        match = _VAR_ATOM.fullmatch(token)
        if match:
            index = int(match.group(1))
            if index < 1:
                cursor.pos -= 1
                raise cursor.fail("variable index must be >= 1")
            if index > scope:
                cursor.pos -= 1
                raise cursor.fail(
                    f"variable x{index} exceeds declared scope {scope}"
                )
            return Var(index)
        cursor.pos -= 1
        raise cursor.fail(f"expected a formula, got {token!r}")
    cursor.next("(")
    op = cursor.next()
    if op == "not":
        child = _parse_expr(cursor, scope)
        cursor.next(")")
        return Not(child)
    if op in ("and", "or"):
        operands = []
        while cursor.peek() != ")":
            if cursor.peek() is None:
                raise cursor.fail("unexpected end of input, expected ')'")
            operands.append(_parse_expr(cursor, scope))
        if len(operands) < 2:
            raise cursor.fail(f"'{op}' needs at least two operands")
        cursor.next(")")
        return and_all(operands) if op == "and" else or_all(operands)
    cursor.pos -= 1
    raise cursor.fail(f"expected 'not', 'and' or 'or', got {op!r}")


def print_circuit(f: Formula) -> str:
    """Canonical one-line circuit text; parse_circuit inverts it exactly."""
    return f"(scope {f.scope}) {_sexp(f.node)}"


def _sexp(node: Node) -> str:
    if type(node) is _Const:
        return "true" if node.value else "false"
    if type(node) is Var:
        return f"x{node.index}"
    if type(node) is Not:
        return f"(not {_sexp(node.child)})"
    if type(node) is And:
        return f"(and {_sexp(node.left)} {_sexp(node.right)})"
    if type(node) is Or:
        return f"(or {_sexp(node.left)} {_sexp(node.right)})"
    raise TypeError(f"unknown node type {type(node).__name__}")


def parse_dimacs(text: str) -> Formula:
    """Parse DIMACS CNF into the conjunction of its clause disjunctions.

    The declared variable count becomes the scope; a file with no clauses
    parses to the true constant over that scope. Clauses may span lines and
    must end with 0.
    """
    n_vars: int | None = None
    clauses: list[list[int]] = []
    pending: list[int] = []
    last_line = 0
    for line_no, raw in enumerate(text.splitlines(), start=1):
        last_line = line_no
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            if n_vars is not None:
                raise ParseError("duplicate DIMACS header", line_no, 1)
            fields = line.split()
            if len(fields) != 4 or fields[0] != "p" or fields[1] != "cnf":
                raise ParseError(f"malformed header {line!r}", line_no, 1)
            try:
                n_vars = int(fields[2])
                declared_clauses = int(fields[3])
            except ValueError:
                raise ParseError(f"malformed header {line!r}", line_no, 1) from None
            if n_vars < 0 or declared_clauses < 0:
                raise ParseError(f"malformed header {line!r}", line_no, 1)
            continue
        if n_vars is None:
            raise ParseError("clause line before the 'p cnf' header", line_no, 1)
        for token in line.split():
            try:
                literal = int(token)
            except ValueError:
                raise ParseError(
                    f"non-integer literal {token!r}", line_no, 1
                ) from None
            if literal == 0:
                clauses.append(pending)
                pending = []
            else:
                if abs(literal) > n_vars:
                    raise ParseError(
                        f"literal {literal} exceeds declared variable count {n_vars}",
                        line_no,
                        1,
                    )
                pending.append(literal)
    if n_vars is None:
        raise ParseError("missing 'p cnf' header", max(last_line, 1), 1)
    if pending:
        raise ParseError(
            "unterminated clause at end of input", max(last_line, 1), 1
        )
    node = and_all([or_all([_literal(lit) for lit in clause]) for clause in clauses])
    return Formula(node, n_vars)


def _literal(lit: int) -> Node:
    return Var(lit) if lit > 0 else Not(Var(-lit))


def read_formula(path: str, fmt: str | None = None) -> Formula:
    """Load a formula file, picking the format from ``fmt`` or the suffix."""
    with open(path, "r", encoding="utf-8") as handle:
        text = handle.read()
    if fmt is None:
        if path.endswith(".cnf"):
            fmt = "dimacs"
        elif path.endswith(".ckt"):
            fmt = "circuit"
        else:
            raise ValueError(
                f"cannot infer format of {path!r}; pass --format circuit|dimacs"
            )
    if fmt == "dimacs":
        return parse_dimacs(text)
    if fmt == "circuit":
        return parse_circuit(text)
    raise ValueError(f"unknown format {fmt!r}")
