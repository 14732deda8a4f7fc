"""Surface syntax for varieties and bundle expressions.

Varieties::

    P(4)    CI(3;2,2)

Bundles::

    expr   := term (("+" | "-") term)*
    term   := factor ("*" factor)*
    factor := "O(" twist ")" | "Omega" | "T" | "K"
            | "Jet(" INT "," expr ")" | "Sym(" INT "," expr ")"
            | "dual(" expr ")" | "det(" expr ")" | "(" expr ")"
    twist  := ["-"] INT | "N" [("+" | "-") INT]

``Jet(n, E)`` is principal parts of order ``n`` tensored with ``E`` and
``K`` is ``det(Omega)``.  Whitespace is ignored.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import List, Optional

from .algebra import TwistPoly
from .bundles import VirtualBundle, determinant, dual, line_bundle, sym_power, tensor
from .errors import ParseError
from .variety import CompleteIntersection, cotangent_ch

MAX_ORDER = 3

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<punct>[(),;+\-*]))")


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "name", "punct", "end"
    text: str
    offset: int  # byte offset


def _byte_offset(text: str, pos: int) -> int:
    return len(text[:pos].encode("utf-8"))


def tokenize(text: str) -> List[Token]:
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            tokens.append(Token("end", "", _byte_offset(text, pos)))
            return tokens
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", _byte_offset(text, pos))
        kind = m.lastgroup
        tokens.append(Token(kind, m.group(kind), _byte_offset(text, m.start(kind))))
        pos = m.end()


# ---------------------------------------------------------------------------
# AST


class Expr:
    """Base class of bundle expression nodes."""

    def __str__(self):
        return pretty(self)


@dataclass(frozen=True)
class Line(Expr):
    offset: int
    twisted: bool = False


@dataclass(frozen=True)
class Omega(Expr):
    pass


@dataclass(frozen=True)
class Tangent(Expr):
    pass


@dataclass(frozen=True)
class Canonical(Expr):
    pass


@dataclass(frozen=True)
class Jet(Expr):
    order: int
    arg: Expr


@dataclass(frozen=True)
class Sym(Expr):
    order: int
    arg: Expr


@dataclass(frozen=True)
class Dual(Expr):
    arg: Expr


@dataclass(frozen=True)
class Det(Expr):
    arg: Expr


@dataclass(frozen=True)
class BinOp(Expr):
    op: str  # "+", "-", "*"
    left: Expr
    right: Expr


# ---------------------------------------------------------------------------
# Parser


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def fail(self, expected, message=None):
        tok = self.tok
        found = "end of input" if tok.kind == "end" else repr(tok.text)
        raise ParseError(message or f"unexpected {found}", tok.offset, expected)

    def accept(self, text: str) -> bool:
        if self.tok.kind in ("punct", "name") and self.tok.text == text:
            self.i += 1
            return True
        return False

    def expect(self, text: str):
        if not self.accept(text):
            self.fail([repr(text)])

    def integer(self) -> int:
        if self.tok.kind != "int":
            self.fail(["integer"])
        value = int(self.tok.text)
        self.i += 1
        return value

    def end(self):
        if self.tok.kind != "end":
            self.fail(["end of input"])


_FACTOR_START = ["'O'", "'Omega'", "'T'", "'K'", "'Jet'", "'Sym'", "'dual'", "'det'", "'('"]


class _BundleParser(_Parser):
    def expr(self) -> Expr:
        node = self.term()
        while self.tok.kind == "punct" and self.tok.text in "+-":
            op = self.tok.text
            self.i += 1
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> Expr:
        node = self.factor()
        while self.accept("*"):
            node = BinOp("*", node, self.factor())
        return node

    def order_arg(self, what: str) -> int:
        tok = self.tok
        n = self.integer()
        if n > MAX_ORDER:
            raise ParseError(f"{what} order {n} exceeds the supported maximum {MAX_ORDER}", tok.offset)
        self.expect(",")
        return n

    def twist(self) -> Line:
        if self.accept("N"):
            if self.accept("+"):
                return Line(self.integer(), True)
            if self.accept("-"):
                return Line(-self.integer(), True)
            return Line(0, True)
        if self.accept("-"):
            return Line(-self.integer())
        if self.tok.kind != "int":
            self.fail(["integer", "'N'", "'-'"])
        return Line(self.integer())

    def factor(self) -> Expr:
        tok = self.tok
        if self.accept("("):
            node = self.expr()
            self.expect(")")
            return node
        if tok.kind != "name":
            self.fail(_FACTOR_START)
        name = tok.text
        self.i += 1
        if name == "Omega":
            return Omega()
        if name == "T":
            return Tangent()
        if name == "K":
            return Canonical()
        if name == "O":
            self.expect("(")
            node = self.twist()
            self.expect(")")
            return node
        if name in ("Jet", "Sym"):
            self.expect("(")
            n = self.order_arg(name)
            arg = self.expr()
            self.expect(")")
            return Jet(n, arg) if name == "Jet" else Sym(n, arg)
        if name in ("dual", "det"):
            self.expect("(")
            arg = self.expr()
            self.expect(")")
            return Dual(arg) if name == "dual" else Det(arg)
        self.i -= 1
        self.fail(_FACTOR_START, f"unknown bundle name {name!r}")


def parse_bundle(text: str) -> Expr:
    p = _BundleParser(text)
    node = p.expr()
    p.end()
    return node


def parse_variety(text: str) -> CompleteIntersection:
    p = _Parser(text)
    tok = p.tok
    if p.accept("P"):
        p.expect("(")
        n = p.integer()
        p.expect(")")
        p.end()
        return CompleteIntersection(n, ())
    if p.accept("CI"):
        p.expect("(")
        n = p.integer()
        p.expect(";")
        degrees = [p.integer()]
        while p.accept(","):
            degrees.append(p.integer())
        p.expect(")")
        p.end()
        return CompleteIntersection(n, tuple(degrees))
    raise ParseError(f"unexpected {tok.text!r}" if tok.text else "empty variety", tok.offset, ["'P'", "'CI'"])


# ---------------------------------------------------------------------------
# Pretty printing

_PREC = {"+": 1, "-": 1, "*": 2}


def _pretty(node: Expr, prec: int) -> str:
    if isinstance(node, Line):
        if not node.twisted:
            return f"O({node.offset})"
        if node.offset == 0:
            return "O(N)"
        sign = "+" if node.offset > 0 else "-"
        return f"O(N{sign}{abs(node.offset)})"
    if isinstance(node, Omega):
        return "Omega"
    if isinstance(node, Tangent):
        return "T"
    if isinstance(node, Canonical):
        return "K"
    if isinstance(node, Jet):
        return f"Jet({node.order}, {_pretty(node.arg, 0)})"
    if isinstance(node, Sym):
        return f"Sym({node.order}, {_pretty(node.arg, 0)})"
    if isinstance(node, Dual):
        return f"dual({_pretty(node.arg, 0)})"
    if isinstance(node, Det):
        return f"det({_pretty(node.arg, 0)})"
    if isinstance(node, BinOp):
        p = _PREC[node.op]
        # left-associative: the right operand needs parentheses at equal precedence
        text = f"{_pretty(node.left, p)} {node.op} {_pretty(node.right, p + 1)}"
        return f"({text})" if p < prec else text
    raise TypeError(f"not a bundle expression: {node!r}")


def pretty(node: Expr) -> str:
    return _pretty(node, 0)


# ---------------------------------------------------------------------------
# Evaluation


def evaluate(
    node: Expr, X: CompleteIntersection, cotangent: Optional[VirtualBundle] = None
) -> VirtualBundle:
    """Evaluate ``node`` on ``X``.  ``cotangent`` overrides ``ch(Omega)``."""
    from .operators import principal_parts

    omega = cotangent if cotangent is not None else cotangent_ch(X)

    def ev(n: Expr) -> VirtualBundle:
        if isinstance(n, Line):
            t = TwistPoly((n.offset, 1)) if n.twisted else TwistPoly.const(n.offset)
            return line_bundle(X, t)
        if isinstance(n, Omega):
            return omega
        if isinstance(n, Tangent):
            return dual(omega)
        if isinstance(n, Canonical):
            return determinant(omega)
        if isinstance(n, Jet):
            return tensor(principal_parts(omega, n.order), ev(n.arg))
        if isinstance(n, Sym):
            return sym_power(n.order, ev(n.arg))
        if isinstance(n, Dual):
            return dual(ev(n.arg))
        if isinstance(n, Det):
            return determinant(ev(n.arg))
        if isinstance(n, BinOp):
            a, b = ev(n.left), ev(n.right)
            if n.op == "+":
                return a + b
            if n.op == "-":
                return a - b
            return tensor(a, b)
        raise TypeError(f"not a bundle expression: {n!r}")

    return ev(node)
