"""Text syntax for algebra terms: parser, printer and evaluator.

Grammar::

    expr    := ["-"] term (("+" | "-") term)*
    term    := factor (OP factor)*          one OP per chain, left-associative
    factor  := "[" poly "]" factor | primary
    primary := atom | "d(" expr ")" | "(" expr ")"
    atom    := name ["^(" n ")" | "'"+]
    OP      := "<:" | ":>" | "." | "*"

``<:`` is ≺, ``:>`` is ≻, ``.`` is • and ``*`` the combined product.  A chain
that mixes different OPs without parentheses is rejected.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Mapping, Union

from .errors import MixedOperatorAmbiguity, ParseError, UnboundSymbol
from .scalars import ONE, Scalar, _ScalarParser

OPS = ("<:", ":>", ".", "*")
OP_NAMES = {"<:": "prec", ":>": "succ", ".": "bullet", "*": "star"}


@dataclass(frozen=True)
class Atom:
    name: str
    order: int = 0


@dataclass(frozen=True)
class D:
    arg: "Expr"


@dataclass(frozen=True)
class Bin:
    op: str
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Scaled:
    coeff: Scalar
    arg: "Expr"


@dataclass(frozen=True)
class Sum:
    """Signed terms, signs in {1, -1}; always produced with at least one term."""

    terms: tuple


Expr = Union[Atom, D, Bin, Scaled, Sum]

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_INT = re.compile(r"\d+")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def offset(self, pos=None) -> int:
        pos = self.pos if pos is None else pos
        return len(self.text[:pos].encode("utf-8"))

    def fail(self, msg, expected, cls=ParseError, pos=None):
        raise cls(msg, self.offset(pos), expected)

    def ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def at(self, s) -> bool:
        self.ws()
        return self.text.startswith(s, self.pos)

    def eat(self, s):
        if not self.at(s):
            self.fail(f"expected {s!r}", (s,))
        self.pos += len(s)

    def peek_op(self):
        self.ws()
        for op in OPS:
            if self.text.startswith(op, self.pos):
                return op
        return None

    def parse(self) -> Expr:
        e = self.expr()
        self.ws()
        if self.pos != len(self.text):
            expected = ("+", "-", ")") + OPS
            self.fail(f"unexpected {self.text[self.pos]!r}", expected)
        return e

    def expr(self) -> Expr:
        terms = []
        sign = 1
        if self.at("-"):
            self.pos += 1
            sign = -1
        terms.append((sign, self.term()))
        while True:
            if self.at("+"):
                self.pos += 1
                terms.append((1, self.term()))
            elif self.at("-"):
                self.pos += 1
                terms.append((-1, self.term()))
            else:
                break
        if len(terms) == 1 and terms[0][0] == 1:
            return terms[0][1]
        return Sum(tuple(terms))

    def term(self) -> Expr:
        left = self.factor()
        op = self.peek_op()
        if op is None:
            return left
        while True:
            nxt = self.peek_op()
            here = self.pos
            if nxt is None:
                return left
            if nxt != op:
                self.fail(f"operators {op!r} and {nxt!r} mixed without parentheses",
                          ("(",), MixedOperatorAmbiguity, here)
            self.pos += len(nxt)
            left = Bin(op, left, self.factor())

    def factor(self) -> Expr:
        if self.at("["):
            start = self.pos + 1
            end = self.text.find("]", start)
            if end < 0:
                self.fail("unterminated scalar prefix", ("]",))
            body = self.text[start:end]
            if not body.strip():
                self.fail("empty scalar prefix", ("poly",))
            sp = _ScalarParser(body, self.offset(start))
            coeff = sp.parse_sum()
            sp.skip_ws()
            if sp.pos != len(body):
                self.fail("malformed scalar prefix", ("]",), pos=start + sp.pos)
            self.pos = end + 1
            return Scaled(coeff, self.factor())
        return self.primary()

    def primary(self) -> Expr:
        self.ws()
        if self.at("("):
            self.pos += 1
            e = self.expr()
            self.eat(")")
            return e
        m = _NAME.match(self.text, self.pos)
        if not m:
            self.fail("expected a term", ("name", "d(", "(", "["))
        self.pos = m.end()
        name = m.group()
        if name == "d" and self.text.startswith("(", self.pos):
            self.pos += 1
            e = self.expr()
            self.eat(")")
            return D(e)
        order = 0
        if self.text.startswith("^(", self.pos):
            self.pos += 2
            self.ws()
            n = _INT.match(self.text, self.pos)
            if not n:
                self.fail("expected a derivation order", ("integer",))
            self.pos = n.end()
            order = int(n.group())
            self.eat(")")
        else:
            while self.text.startswith("'", self.pos):
                self.pos += 1
                order += 1
        return Atom(name, order)


def parse_expr(text: str) -> Expr:
    return _Parser(text).parse()


# --- printing --------------------------------------------------------------


def _needs_parens_as_factor(e) -> bool:
    return isinstance(e, (Bin, Sum))


def print_expr(e: Expr) -> str:
    """Canonical text; ``parse_expr(print_expr(e)) == e`` for every AST."""
    if isinstance(e, Atom):
        return f"{e.name}^({e.order})" if e.order else e.name
    if isinstance(e, D):
        return f"d({print_expr(e.arg)})"
    if isinstance(e, Scaled):
        inner = print_expr(e.arg)
        if _needs_parens_as_factor(e.arg):
            inner = f"({inner})"
        return f"[{e.coeff}] {inner}"
    if isinstance(e, Bin):
        left = print_expr(e.left)
        if isinstance(e.left, Sum) or (isinstance(e.left, Bin) and e.left.op != e.op):
            left = f"({left})"
        right = print_expr(e.right)
        if _needs_parens_as_factor(e.right):
            right = f"({right})"
        return f"{left} {e.op} {right}"
    if isinstance(e, Sum):
        parts = []
        for i, (sign, t) in enumerate(e.terms):
            s = print_expr(t)
            if isinstance(t, Sum):
                s = f"({s})"
            if i == 0:
                parts.append(s if sign == 1 else f"-{s}")
            else:
                parts.append(("+ " if sign == 1 else "- ") + s)
        return " ".join(parts)
    raise TypeError(f"not an expression: {e!r}")


# --- evaluation ------------------------------------------------------------


def free_symbols(e: Expr) -> set:
    if isinstance(e, Atom):
        return {e.name}
    if isinstance(e, (D, Scaled)):
        return free_symbols(e.arg)
    if isinstance(e, Bin):
        return free_symbols(e.left) | free_symbols(e.right)
    out = set()
    for _, t in e.terms:
        out |= free_symbols(t)
    return out


def eval_expr(e: Expr, model, bindings: Mapping):
    """Evaluate in ``model`` with each symbol name looked up in ``bindings``."""
    if isinstance(e, Atom):
        if e.name not in bindings:
            raise UnboundSymbol(e.name)
        val = bindings[e.name]
        for _ in range(e.order):
            val = model.d(val)
        return val
    if isinstance(e, D):
        return model.d(eval_expr(e.arg, model, bindings))
    if isinstance(e, Scaled):
        return e.coeff * eval_expr(e.arg, model, bindings)
    if isinstance(e, Bin):
        method = getattr(model, OP_NAMES[e.op], None)
        if method is None:
            raise ValueError(f"model {type(model).__name__} has no operation {e.op!r}")
        return method(eval_expr(e.left, model, bindings), eval_expr(e.right, model, bindings))
    total = None
    for sign, t in e.terms:
        v = eval_expr(t, model, bindings)
        v = v if sign == 1 else -v
        total = v if total is None else total + v
    return total


__all__ = ["Atom", "D", "Bin", "Scaled", "Sum", "Expr", "parse_expr", "print_expr",
           "eval_expr", "free_symbols", "ONE"]
