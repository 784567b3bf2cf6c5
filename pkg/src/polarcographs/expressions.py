"""Algebraic cograph expression language.

Grammar (ASCII-safe; '*' is join, '+' is disjoint union, '~' is complement):

    expr   := term ('+' term)*
    term   := factor ('*' factor)*
    factor := INT factor | prefix
    prefix := '~' prefix | atom | '(' expr ')'
    atom   := 'K' INT | 'P' INT | 'C' INT | 'K' '{' INT ',' INT '}'

Precedence: complement > repetition > join > union.  Atoms are restricted to
cographs, so P_n is only allowed for n <= 3 and C_n for n in {3, 4}.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import graphs
from .graphs import Graph


class ExprError(ValueError):
    """Syntax or atom-validity error, carrying the byte offset in the input."""

    def __init__(self, message, offset):
        super().__init__(f"{message} (at offset {offset})")
        self.message = message
        self.offset = offset


@dataclass(frozen=True)
class Atom:
    kind: str  # 'K', 'P' or 'C'
    n: int


@dataclass(frozen=True)
class Biclique:
    a: int
    b: int


@dataclass(frozen=True)
class Union:
    parts: tuple


@dataclass(frozen=True)
class Join:
    parts: tuple


@dataclass(frozen=True)
class Repeat:
    count: int
    expr: object


@dataclass(frozen=True)
class Complement:
    expr: object


def _check_atom(kind, n, offset=None):
    def fail(msg):
        if offset is None:
            raise ValueError(msg)
        raise ExprError(msg, offset)

    if n < 1:
        fail(f"{kind}{n} needs a positive order")
    if kind == "P" and n > 3:
        fail(f"P{n} is not a cograph")
    if kind == "C" and n not in (3, 4):
        fail(f"C{n} is not a cograph")


def K(n):
    _check_atom("K", n)
    return Atom("K", n)


def P(n):
    _check_atom("P", n)
    return Atom("P", n)


def C(n):
    _check_atom("C", n)
    return Atom("C", n)


def Kbip(a, b):
    if a < 1 or b < 1:
        raise ValueError("biclique parts must be positive")
    return Biclique(a, b)


def union(*parts):
    flat = []
    for p in parts:
        if isinstance(p, Union):
            flat.extend(p.parts)
        else:
            flat.append(p)
    if len(flat) == 1:
        return flat[0]
    if len(flat) < 2:
        raise ValueError("union needs at least two operands")
    return Union(tuple(flat))


def joined(*parts):
    flat = []
    for p in parts:
        if isinstance(p, Join):
            flat.extend(p.parts)
        else:
            flat.append(p)
    if len(flat) == 1:
        return flat[0]
    if len(flat) < 2:
        raise ValueError("join needs at least two operands")
    return Join(tuple(flat))


def repeat(count, expr):
    if count < 1:
        raise ValueError("repeat count must be at least 1")
    if count == 1:
        return expr
    return Repeat(count, expr)


def comp(expr):
    return Complement(expr)


# -- parser -------------------------------------------------------------------


class _Parser:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def error(self, message, offset=None):
        raise ExprError(message, self.pos if offset is None else offset)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def eat(self, ch):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def integer(self):
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.error("expected an integer")
        return int(self.text[start:self.pos])

    def expr(self):
        parts = [self.term()]
        while self.peek() == "+":
            self.pos += 1
            parts.append(self.term())
        return parts[0] if len(parts) == 1 else Union(tuple(parts))

    def term(self):
        parts = [self.factor()]
        while self.peek() == "*":
            self.pos += 1
            parts.append(self.factor())
        return parts[0] if len(parts) == 1 else Join(tuple(parts))

    def factor(self):
        ch = self.peek()
        if ch.isdigit():
            count_at = self.pos
            count = self.integer()
            if count < 1:
                self.error("repeat count must be at least 1", count_at)
            inner = self.factor()
            return inner if count == 1 else Repeat(count, inner)
        return self.prefix()

    def prefix(self):
        ch = self.peek()
        if ch == "~":
            self.pos += 1
            return Complement(self.prefix())
        if ch == "(":
            self.pos += 1
            inner = self.expr()
            self.eat(")")
            return inner
        return self.atom()

    def atom(self):
        ch = self.peek()
        at = self.pos
        if ch not in ("K", "P", "C"):
            self.error("expected an atom, '(', '~' or a repeat count")
        self.pos += 1
        if ch == "K" and self.peek() == "{":
            self.pos += 1
            a = self.integer()
            self.eat(",")
            b = self.integer()
            self.eat("}")
            if a < 1 or b < 1:
                self.error("biclique parts must be positive", at)
            return Biclique(a, b)
        n = self.integer()
        _check_atom(ch, n, at)
        return Atom(ch, n)


def parse(text):
    p = _Parser(text)
    out = p.expr()
    p.skip_ws()
    if p.pos != len(text):
        p.error("trailing input")
    return out


# -- evaluation ---------------------------------------------------------------


def evaluate(e):
    """Build the graph denoted by an expression AST."""
    if isinstance(e, Atom):
        if e.kind == "K":
            return Graph.complete(e.n)
        if e.kind == "P":
            return Graph.path(e.n)
        return Graph.cycle(e.n)
    if isinstance(e, Biclique):
        return graphs.join(Graph.empty(e.a), Graph.empty(e.b))
    if isinstance(e, Union):
        out = evaluate(e.parts[0])
        for p in e.parts[1:]:
            out = graphs.disjoint_union(out, evaluate(p))
        return out
    if isinstance(e, Join):
        out = evaluate(e.parts[0])
        for p in e.parts[1:]:
            out = graphs.join(out, evaluate(p))
        return out
    if isinstance(e, Repeat):
        one = evaluate(e.expr)
        out = one
        for _ in range(e.count - 1):
            out = graphs.disjoint_union(out, one)
        return out
    if isinstance(e, Complement):
        return graphs.complement(evaluate(e.expr))
    raise TypeError(f"not an expression node: {e!r}")


# -- printing -----------------------------------------------------------------

_LEVEL_UNION = 0
_LEVEL_JOIN = 1
_LEVEL_REPEAT = 2
_LEVEL_PREFIX = 3


def _level(e):
    if isinstance(e, Union):
        return _LEVEL_UNION
    if isinstance(e, Join):
        return _LEVEL_JOIN
    if isinstance(e, Repeat):
        return _LEVEL_REPEAT
    return _LEVEL_PREFIX


def _fmt(e, need):
    if isinstance(e, Atom):
        text = f"{e.kind}{e.n}"
    elif isinstance(e, Biclique):
        text = f"K{{{e.a},{e.b}}}"
    elif isinstance(e, Union):
        text = " + ".join(_fmt(p, _LEVEL_JOIN) for p in e.parts)
    elif isinstance(e, Join):
        text = " * ".join(_fmt(p, _LEVEL_REPEAT) for p in e.parts)
    elif isinstance(e, Repeat):
        if e.count == 1:
            return _fmt(e.expr, need)
        text = f"{e.count}{_fmt(e.expr, _LEVEL_PREFIX)}"
    elif isinstance(e, Complement):
        text = f"~{_fmt(e.expr, _LEVEL_PREFIX)}"
    else:
        raise TypeError(f"not an expression node: {e!r}")
    if _level(e) < need:
        return f"({text})"
    return text


def unparse(e):
    """Canonical text; parsing it back gives the same AST after normalization."""
    return _fmt(e, _LEVEL_UNION)


def normalize(e):
    """Flatten nested unions/joins and drop unit repeats."""
    if isinstance(e, Union):
        return union(*[normalize(p) for p in e.parts])
    if isinstance(e, Join):
        return joined(*[normalize(p) for p in e.parts])
    if isinstance(e, Repeat):
        return repeat(e.count, normalize(e.expr))
    if isinstance(e, Complement):
        return Complement(normalize(e.expr))
    return e


# -- catalog file format --------------------------------------------------------


def load_expression_lines(text):
    """Parse the on-disk format: one expression per line, '#' starts a comment."""
    out = []
    for line in text.splitlines():
        body = line.split("#", 1)[0].strip()
        if body:
            out.append(parse(body))
    return out
