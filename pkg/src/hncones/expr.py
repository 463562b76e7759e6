"""A small calculator language for classes in N(P(E)).

Grammar (whitespace insensitive)::

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := '-' factor | atom ('^' uint)?
    atom   := 'xi' | 'f' | rational | '(' expr ')'

``rational`` is an integer or ``p/q``. Unary minus binds looser than ``^``,
so ``-xi^2`` means ``-(xi^2)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .chow_ring import ChowElement, RingSpec


class ExprSyntaxError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


@dataclass(frozen=True)
class Literal:
    value: Fraction


@dataclass(frozen=True)
class Symbol:
    name: str  # "xi" or "f"


@dataclass(frozen=True)
class Sum:
    left: "Node"
    op: str
    right: "Node"


@dataclass(frozen=True)
class Product:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Power:
    base: "Node"
    exponent: int


@dataclass(frozen=True)
class Neg:
    operand: "Node"


@dataclass(frozen=True)
class Group:
    inner: "Node"


Node = Union[Literal, Symbol, Sum, Product, Power, Neg, Group]

_TOKEN = re.compile(
    r"(?P<ws>\s+)|(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z_]\w*)|(?P<op>[-+*^()])"
)


def _tokenize(src: str):
    tokens = []
    pos = 0
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if not m:
            raise ExprSyntaxError(f"unexpected character {src[pos]!r}", pos)
        kind = m.lastgroup
        if kind != "ws":
            tokens.append((kind, m.group(), pos))
        pos = m.end()
    tokens.append(("end", "", len(src)))
    return tokens


class _Parser:
    def __init__(self, src: str):
        self.tokens = _tokenize(src)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, text):
        kind, val, pos = self.take()
        if val != text:
            found = "end of input" if kind == "end" else repr(val)
            raise ExprSyntaxError(f"expected {text!r}, found {found}", pos)

    def parse(self) -> Node:
        node = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ExprSyntaxError(f"unexpected {val!r}", pos)
        return node

    def expr(self) -> Node:
        node = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            node = Sum(node, op, self.term())
        return node

    def term(self) -> Node:
        node = self.factor()
        while self.peek()[1] == "*":
            self.take()
            node = Product(node, self.factor())
        return node

    def factor(self) -> Node:
        if self.peek()[1] == "-":
            self.take()
            return Neg(self.factor())
        node = self.atom()
        if self.peek()[1] == "^":
            self.take()
            kind, val, pos = self.take()
            if kind != "num" or "/" in val:
                what = "end of input" if kind == "end" else repr(val)
                raise ExprSyntaxError(f"exponent must be a nonnegative integer, found {what}", pos)
            node = Power(node, int(val))
        return node

    def atom(self) -> Node:
        kind, val, pos = self.take()
        if kind == "num":
            num, _, den = val.partition("/")
            if den and int(den) == 0:
                raise ExprSyntaxError("zero denominator", pos)
            return Literal(Fraction(int(num), int(den) if den else 1))
        if kind == "name":
            if val not in ("xi", "f"):
                raise ExprSyntaxError(f"unknown symbol {val!r}; use 'xi' or 'f'", pos)
            return Symbol(val)
        if val == "(":
            inner = self.expr()
            self.expect(")")
            return Group(inner)
        found = "end of input" if kind == "end" else repr(val)
        raise ExprSyntaxError(f"unexpected {found}", pos)


def parse_expr(src: str) -> Node:
    return _Parser(src).parse()


def eval_expr(node: Node, spec: RingSpec) -> ChowElement:
    if isinstance(node, Literal):
        return spec.constant(node.value)
    if isinstance(node, Symbol):
        return spec.xi() if node.name == "xi" else spec.f()
    if isinstance(node, Sum):
        left, right = eval_expr(node.left, spec), eval_expr(node.right, spec)
        return left + right if node.op == "+" else left - right
    if isinstance(node, Product):
        return eval_expr(node.left, spec) * eval_expr(node.right, spec)
    if isinstance(node, Power):
        return eval_expr(node.base, spec) ** node.exponent
    if isinstance(node, Neg):
        return -eval_expr(node.operand, spec)
    if isinstance(node, Group):
        return eval_expr(node.inner, spec)
    raise TypeError(f"not an expression node: {node!r}")


def evaluate(src: str, spec: RingSpec) -> ChowElement:
    return eval_expr(parse_expr(src), spec)
