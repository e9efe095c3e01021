"""Axiom systems as data, plus one evaluator that checks them on test elements.

An identity is written as text, e.g. ``"(a ≺ b) ≺ c = a ≺ (b ≺ c + b ≻ c)"``.
Grammar::

    identity := expr "=" expr
    expr     := ["-"] term (("+" | "-") term)*
    term     := coeff* operand [OP operand]
    operand  := var | "(" expr ")" | "d" "(" expr ")"
    coeff    := integer | "λ" | "q"

Variables are ``a``, ``b``, ``c``.  ``λ`` and ``q`` are looked up in the
table's scalars, so the same text serves symbolic and specialized checks.
"""

from __future__ import annotations

import json
import logging
import warnings
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterable, Sequence

from .errors import ParseError
from .scalars import ONE, Scalar

log = logging.getLogger(__name__)

OPERATION_SYMBOLS = frozenset("≺≻•⋆∗⊢⊣⊥∘↘↗↙↖∨∧◁▷⊻")
VARIABLES = ("a", "b", "c")


@dataclass
class OpTable:
    """Named bilinear operations over a common element type.

    ``ops`` maps an operation symbol to a function of two elements; ``d`` is
    an optional derivation and ``scalars`` resolves the coefficient symbols
    ``λ`` and ``q`` used inside identities.
    """

    ops: dict
    d: Callable | None = None
    scalars: dict = field(default_factory=dict)
    name: str = ""

    def __getitem__(self, symbol):
        return self.ops[symbol]

    def with_ops(self, name: str | None = None, **replace) -> "OpTable":
        ops = dict(self.ops)
        ops.update(replace)
        return OpTable(ops, self.d, dict(self.scalars), name or self.name)


# --- identity syntax -------------------------------------------------------


class Identity:
    """One formal identity ``lhs = rhs`` between composed operations."""

    def __init__(self, name: str, text: str):
        self.name = name
        self.text = text
        self.lhs, self.rhs = _IdentityParser(text).identity()
        used = set()
        _walk(self.lhs, used)
        _walk(self.rhs, used)
        self.operations = frozenset(s for kind, s in used if kind == "op")
        self.uses_d = ("d", None) in used
        self.coefficients = frozenset(s for kind, s in used if kind == "coeff")
        variables = {s for kind, s in used if kind == "var"}
        self.arity = max(VARIABLES.index(v) for v in variables) + 1

    def __repr__(self):
        return f"Identity({self.name!r}, {self.text!r})"

    def evaluate(self, table: OpTable, args: Sequence):
        """Return lhs - rhs for the given arguments."""
        env = dict(zip(VARIABLES, args))
        return _eval(self.lhs, table, env) - _eval(self.rhs, table, env)


def _walk(node, used):
    kind = node[0]
    if kind == "var":
        used.add(("var", node[1]))
    elif kind == "op":
        used.add(("op", node[1]))
        _walk(node[2], used)
        _walk(node[3], used)
    elif kind == "d":
        used.add(("d", None))
        _walk(node[1], used)
    elif kind == "sum":
        for coeffs, term in node[1]:
            for c in coeffs:
                if not isinstance(c, int):
                    used.add(("coeff", c))
            _walk(term, used)


def _eval(node, table: OpTable, env):
    kind = node[0]
    if kind == "var":
        return env[node[1]]
    if kind == "op":
        return table.ops[node[1]](_eval(node[2], table, env), _eval(node[3], table, env))
    if kind == "d":
        if table.d is None:
            raise KeyError(f"table {table.name!r} has no derivation")
        return table.d(_eval(node[1], table, env))
    total = None
    for coeffs, term in node[1]:
        value = _eval(term, table, env)
        scale = ONE
        for c in coeffs:
            scale = scale * (Scalar.const(c) if isinstance(c, int) else table.scalars[c])
        value = scale * value
        total = value if total is None else total + value
    return total


class _IdentityParser:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def peek(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch):
        if self.peek() != ch:
            raise ParseError(f"expected {ch!r} in identity {self.text!r}", self.pos, (ch,))
        self.pos += 1

    def identity(self):
        lhs = self.expr()
        self.take("=")
        rhs = self.expr()
        if self.peek():
            raise ParseError(f"trailing input in identity {self.text!r}", self.pos, ("end",))
        return lhs, rhs

    def expr(self):
        terms = []
        sign = 1
        if self.peek() == "-":
            self.pos += 1
            sign = -1
        terms.append(self.term(sign))
        while self.peek() in ("+", "-") and self.peek():
            sign = 1 if self.text[self.pos] == "+" else -1
            self.pos += 1
            terms.append(self.term(sign))
        if len(terms) == 1 and terms[0][0] == (1,):
            return terms[0][1]
        return ("sum", terms)

    def term(self, sign):
        coeffs = [sign]
        while True:
            ch = self.peek()
            if ch.isdigit():
                start = self.pos
                while self.pos < len(self.text) and self.text[self.pos].isdigit():
                    self.pos += 1
                coeffs.append(int(self.text[start:self.pos]))
            elif ch in ("λ", "q"):
                self.pos += 1
                coeffs.append(ch)
            else:
                break
        left = self.operand()
        ch = self.peek()
        if ch in OPERATION_SYMBOLS:
            self.pos += 1
            right = self.operand()
            left = ("op", ch, left, right)
        return (tuple(coeffs), left)

    def operand(self):
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            inner = self.expr()
            self.take(")")
            return inner
        if ch == "d":
            self.pos += 1
            self.take("(")
            inner = self.expr()
            self.take(")")
            return ("d", inner)
        if ch in VARIABLES:
            self.pos += 1
            return ("var", ch)
        raise ParseError(f"unexpected {ch!r} in identity {self.text!r}", self.pos,
                         ("(", "d(", "a", "b", "c"))


class IdentityList(list):
    """A named, ordered list of identities."""

    def __init__(self, name: str, entries: Iterable[tuple]):
        super().__init__(Identity(f"{name}[{n}]", text) for n, text in entries)
        self.name = name

    def operations(self) -> frozenset:
        out = frozenset()
        for ident in self:
            out |= ident.operations
        return out


def _numbered(name, texts):
    return IdentityList(name, [(i + 1, t) for i, t in enumerate(texts)])


# --- the axiom library -----------------------------------------------------

DENDRIFORM = _numbered("dendriform", [
    "(a ≺ b) ≺ c = a ≺ (b ≺ c + b ≻ c)",
    "(a ≻ b) ≺ c = a ≻ (b ≺ c)",
    "(a ≺ b + a ≻ b) ≻ c = a ≻ (b ≻ c)",
])

# The combined product is expanded as < + > + q . so a table need not supply it.
Q_TRIDENDRIFORM = _numbered("q_tridendriform", [
    "(a ≺ b) ≺ c = a ≺ (b ≺ c + b ≻ c + q b • c)",
    "(a ≻ b) ≺ c = a ≻ (b ≺ c)",
    "(a ≺ b + a ≻ b + q a • b) ≻ c = a ≻ (b ≻ c)",
    "(a ≻ b) • c = a ≻ (b • c)",
    "(a ≺ b) • c = a • (b ≻ c)",
    "(a • b) ≺ c = a • (b ≺ c)",
    "(a • b) • c = a • (b • c)",
])

STAR_ASSOCIATIVE = _numbered("star_associative", ["(a ⋆ b) ⋆ c = a ⋆ (b ⋆ c)"])
STAR_COMMUTATIVE = _numbered("star_commutative", ["a ⋆ b = b ⋆ a"])
STAR_SPLITTING = _numbered("star_splitting", ["a ⋆ b = a ≺ b + a ≻ b + q a • b"])

COMMUTATIVE_DENDRIFORM = _numbered("commutative_dendriform", ["a ≻ b = b ≺ a"])
COMMUTATIVE_TRIDENDRIFORM = _numbered("commutative_tridendriform", [
    "a ≻ b = b ≺ a",
    "a • b = b • a",
])

LEIBNIZ_DENDRIFORM = IdentityList("leibniz", [
    ("≺", "d(a ≺ b) = d(a) ≺ b + a ≺ d(b) + λ d(a) ≺ d(b)"),
    ("≻", "d(a ≻ b) = d(a) ≻ b + a ≻ d(b) + λ d(a) ≻ d(b)"),
])
LEIBNIZ_TRIDENDRIFORM = IdentityList("leibniz", [
    ("≺", "d(a ≺ b) = d(a) ≺ b + a ≺ d(b) + λ d(a) ≺ d(b)"),
    ("≻", "d(a ≻ b) = d(a) ≻ b + a ≻ d(b) + λ d(a) ≻ d(b)"),
    ("•", "d(a • b) = d(a) • b + a • d(b) + λ d(a) • d(b)"),
])
LEIBNIZ_UNARY_D = IdentityList("leibniz_assoc", [
    ("·", "d(a • b) = d(a) • b + a • d(b) + λ d(a) • d(b)"),
])

NOVIKOV = _numbered("novikov", [
    "(a ∘ b) ∘ c = (a ∘ c) ∘ b",
    "(a ∘ b) ∘ c - a ∘ (b ∘ c) = (b ∘ a) ∘ c - b ∘ (a ∘ c)",
])

NOVIKOV_ASSOCIATIVE = _numbered("novikov_associative", [
    "(a ⊢ b) ⊣ c = a ⊢ (b ⊣ c)",
    "(a ⊣ b) ⊣ c - a ⊣ (b ⊢ c) = a ⊢ (b ⊢ c) - (a ⊣ b) ⊢ c",
])
COMMUTATIVE_NOVIKOV_ASSOCIATIVE = _numbered("commutative_novikov_associative", [
    "a ⊣ b = b ⊢ a",
])

NOVIKOV_DENDRIFORM = _numbered("novikov_dendriform", [
    "(a ↙ b) ↖ c = a ↙ (b ↗ c + b ↖ c)",
    "(a ↘ b) ↖ c = a ↘ (b ↖ c)",
    "(a ↘ b + a ↙ b) ↗ c = a ↘ (b ↗ c)",
    "(a ↖ b) ↖ c - a ↖ (b ↘ c + b ↙ c) = a ↙ (b ↘ c + b ↙ c) - (a ↖ b) ↙ c",
    "(a ↗ b) ↖ c - a ↗ (b ↙ c) = a ↘ (b ↙ c) - (a ↗ b) ↙ c",
    "(a ↗ b + a ↖ b) ↗ c - a ↗ (b ↘ c) = a ↘ (b ↘ c) - (a ↗ b + a ↖ b) ↘ c",
])
COMMUTATIVE_NOVIKOV_DENDRIFORM = _numbered("commutative_novikov_dendriform", [
    "a ↖ b = b ↘ a",
    "a ↗ b = b ↙ a",
])

PRE_NOVIKOV = _numbered("pre_novikov", [
    "(a ◁ b) ◁ c - a ◁ (b ▷ c + b ◁ c) = (b ▷ a) ◁ c - b ▷ (a ◁ c)",
    "(a ▷ b + a ◁ b) ▷ c - a ▷ (b ▷ c) = (b ▷ a + b ◁ a) ▷ c - b ▷ (a ▷ c)",
    "(a ◁ b) ◁ c = (a ◁ c) ◁ b",
    "(a ▷ b + a ◁ b) ▷ c = (a ▷ c) ◁ b",
])

_NTD_TEXTS = [
    "(a ↙ b) ↖ c = a ↙ (b ↗ c + b ↖ c + {q}b ∧ c)",
    "(a ↘ b) ↖ c = a ↘ (b ↖ c)",
    "(a ↘ b + a ↙ b + {q}a ∨ b) ↗ c = a ↘ (b ↗ c)",
    "(a ↖ b) ↖ c - a ↖ (b ↘ c + b ↙ c + {q}b ∨ c) = a ↙ (b ↘ c + b ↙ c + {q}b ∨ c) - (a ↖ b) ↙ c",
    "(a ↗ b) ↖ c - a ↗ (b ↙ c) = a ↘ (b ↙ c) - (a ↗ b) ↙ c",
    "(a ↗ b + a ↖ b + {q}a ∧ b) ↗ c - a ↗ (b ↘ c) = a ↘ (b ↘ c) - (a ↗ b + a ↖ b + {q}a ∧ b) ↘ c",
    "(a ∨ b) ↖ c = a ∨ (b ↖ c)",
    "(a ∧ b) ↖ c - a ∧ (b ↙ c) = a ∨ (b ↙ c) - (a ∧ b) ↙ c",
    "(a ↙ b) ∧ c = a ∨ (b ↗ c)",
    "(a ↖ b) ∧ c - a ∧ (b ↘ c) = a ∨ (b ↘ c) - (a ↖ b) ∨ c",
    "(a ↘ b) ∧ c = a ↘ (b ∧ c)",
    "(a ↗ b) ∧ c - a ↗ (b ∨ c) = a ↘ (b ∨ c) - (a ↗ b) ∨ c",
    "(a ∨ b) ∧ c = a ∨ (b ∧ c)",
    "(a ∧ b) ∧ c - a ∧ (b ∨ c) = a ∨ (b ∨ c) - (a ∧ b) ∨ c",
]

NOVIKOV_TRIDENDRIFORM = _numbered("novikov_tridendriform", [t.format(q="") for t in _NTD_TEXTS])
# The list above holds for ordinary (q = 1) tridendriform input.  Each ∨ or ∧
# term comes from the combined product, so for general q it carries a factor q.
NOVIKOV_TRIDENDRIFORM_Q = _numbered("novikov_tridendriform_q",
                                    [t.format(q="q ") for t in _NTD_TEXTS])
COMMUTATIVE_NOVIKOV_TRIDENDRIFORM = _numbered("commutative_novikov_tridendriform", [
    "a ↖ b = b ↘ a",
    "a ↗ b = b ↙ a",
    "a ∧ b = b ∨ a",
])

_PN_TEXTS = [
    "(a ▷ b) ◁ c = (a ▷ c + a ◁ c + {q}a ⊻ c) ▷ b",
    "(a ◁ b) ◁ c = (a ◁ c) ◁ b",
    "(a ◁ b) ◁ c - a ◁ (b ◁ c + b ▷ c + {q}b ⊻ c) = (b ▷ a) ◁ c - b ▷ (a ◁ c)",
    "(a ▷ b) ◁ c - a ▷ (c ▷ b) = (c ▷ b) ◁ a - c ▷ (a ▷ b)",
    "(a ⊻ b) ◁ c = (a ◁ c) ⊻ b",
    "(a ⊻ b) ◁ c - a ⊻ (b ▷ c) = (b ▷ a) ⊻ c - b ▷ (a ⊻ c)",
    "(a ▷ b) ⊻ c = (a ▷ c) ⊻ b",
    "(a ◁ b) ⊻ c - a ⊻ (b ◁ c) = (b ◁ a) ⊻ c - b ⊻ (a ◁ c)",
    "(a ⊻ b) ⊻ c = (a ⊻ c) ⊻ b",
    "(a ⊻ b) ⊻ c - a ⊻ (b ⊻ c) = (b ⊻ a) ⊻ c - b ⊻ (a ⊻ c)",
]

POST_NOVIKOV = _numbered("post_novikov", [t.format(q="") for t in _PN_TEXTS])

# Entries 6 and 8 as listed above fail on commutative models (the quasi-shuffle
# algebra at q = 1 already gives a witness).  Transporting Novikov-tridendriform
# entries 8 and 10 through the commutative dictionary yields the versions
# below, which differ only in the placement of b and c.
_PN_FIXED = dict(enumerate(_PN_TEXTS, 1))
_PN_FIXED[6] = "(a ⊻ b) ◁ c - a ⊻ (c ▷ b) = (c ▷ b) ⊻ a - c ▷ (a ⊻ b)"
_PN_FIXED[8] = "(a ◁ b) ⊻ c - a ⊻ (c ◁ b) = (c ◁ b) ⊻ a - c ⊻ (a ◁ b)"
POST_NOVIKOV_CORRECTED = _numbered("post_novikov_corrected",
                                   [_PN_FIXED[i].format(q="") for i in sorted(_PN_FIXED)])
POST_NOVIKOV_CORRECTED_Q = _numbered("post_novikov_corrected_q",
                                     [_PN_FIXED[i].format(q="q ") for i in sorted(_PN_FIXED)])

DIASSOCIATIVE = _numbered("diassociative", [
    "(a ⊣ b) ⊣ c = a ⊣ (b ⊣ c)",
    "(a ⊣ b) ⊣ c = a ⊣ (b ⊢ c)",
    "(a ⊢ b) ⊣ c = a ⊢ (b ⊣ c)",
    "(a ⊣ b) ⊢ c = a ⊢ (b ⊢ c)",
    "(a ⊢ b) ⊢ c = a ⊢ (b ⊢ c)",
])

Q_TRIASSOCIATIVE = _numbered("q_triassociative", [
    "(a ⊣ b) ⊣ c = a ⊣ (b ⊣ c)",
    "(a ⊣ b) ⊣ c = a ⊣ (b ⊢ c)",
    "(a ⊢ b) ⊣ c = a ⊢ (b ⊣ c)",
    "(a ⊣ b) ⊢ c = a ⊢ (b ⊢ c)",
    "(a ⊢ b) ⊢ c = a ⊢ (b ⊢ c)",
    "(a ⊥ b) ⊥ c = a ⊥ (b ⊥ c)",
    "(a ⊣ b) ⊣ c = q a ⊣ (b ⊥ c)",
    "(a ⊥ b) ⊣ c = a ⊥ (b ⊣ c)",
    "(a ⊣ b) ⊥ c = a ⊥ (b ⊢ c)",
    "(a ⊢ b) ⊥ c = a ⊢ (b ⊥ c)",
    "q (a ⊥ b) ⊢ c = a ⊢ (b ⊢ c)",
])

LIBRARY = {
    lst.name: lst
    for lst in (DENDRIFORM, Q_TRIDENDRIFORM, STAR_ASSOCIATIVE, STAR_COMMUTATIVE, STAR_SPLITTING,
                COMMUTATIVE_DENDRIFORM, COMMUTATIVE_TRIDENDRIFORM, NOVIKOV, NOVIKOV_ASSOCIATIVE,
                COMMUTATIVE_NOVIKOV_ASSOCIATIVE, NOVIKOV_DENDRIFORM,
                COMMUTATIVE_NOVIKOV_DENDRIFORM, PRE_NOVIKOV, NOVIKOV_TRIDENDRIFORM,
                COMMUTATIVE_NOVIKOV_TRIDENDRIFORM, POST_NOVIKOV, DIASSOCIATIVE,
                NOVIKOV_TRIDENDRIFORM_Q, POST_NOVIKOV_CORRECTED, POST_NOVIKOV_CORRECTED_Q,
                Q_TRIASSOCIATIVE)
}
LIBRARY["leibniz_dendriform"] = LEIBNIZ_DENDRIFORM
LIBRARY["leibniz_tridendriform"] = LEIBNIZ_TRIDENDRIFORM


# --- the checker -----------------------------------------------------------


@dataclass
class IdentityResult:
    name: str
    status: str  # "pass" or "fail"
    checked: int = 0
    witness: tuple | None = None
    residual: str | None = None
    note: str | None = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        out = {"name": self.name, "status": self.status, "checked": self.checked}
        if self.witness is not None:
            out["witness"] = list(self.witness)
        if self.residual is not None:
            out["residual"] = self.residual
        if self.note:
            out["note"] = self.note
        return out


@dataclass
class Report:
    results: list

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self) -> list:
        return [r for r in self.results if not r.passed]

    def __getitem__(self, name) -> IdentityResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    def to_json_lines(self) -> str:
        return "\n".join(json.dumps(r.to_dict(), ensure_ascii=False) for r in self.results)


def tuples_up_to(elements: Sequence, arity: int, size: Callable | None = None,
                 max_total: int | None = None):
    """Ordered tuples from ``elements``; filtered by total size when given."""
    if size is None or max_total is None:
        yield from product(elements, repeat=arity)
        return
    sized = [(e, size(e)) for e in elements]
    for combo in product(sized, repeat=arity):
        if sum(s for _, s in combo) <= max_total:
            yield tuple(e for e, _ in combo)


def check_identities(table: OpTable, identities: Iterable[Identity], test_elements: Sequence,
                     *, size: Callable | None = None, max_total: int | None = None,
                     render: Callable = str) -> Report:
    """Evaluate every identity on every ordered tuple drawn from ``test_elements``.

    Tuples are optionally restricted to ``sum(size(e)) <= max_total``.  The
    first failing tuple of each identity is reported with its residual.
    """
    test_elements = list(test_elements)
    results = []
    for ident in identities:
        missing = ident.operations - set(table.ops)
        if missing:
            raise KeyError(f"{ident.name} uses operations {sorted(missing)} absent from {table.name!r}")
        if not test_elements:
            warnings.warn(f"{ident.name}: no test elements, identity passes vacuously")
            results.append(IdentityResult(ident.name, "pass", 0, note="vacuous: no test elements"))
            continue
        checked = 0
        failure = None
        for args in tuples_up_to(test_elements, ident.arity, size, max_total):
            checked += 1
            residual = ident.evaluate(table, args)
            if residual:
                failure = IdentityResult(ident.name, "fail", checked,
                                         tuple(render(a) for a in args), render(residual))
                break
        if failure is None:
            results.append(IdentityResult(ident.name, "pass", checked))
        else:
            log.info("identity %s failed on %s", ident.name, failure.witness)
            results.append(failure)
    return Report(results)
