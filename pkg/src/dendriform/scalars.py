"""Exact coefficients: sparse polynomials in two formal symbols ``lam`` and ``q``
over the rationals, and formal linear combinations over an ordered basis.

Rationals are :class:`fractions.Fraction`, which already keeps numerator and
denominator coprime with a positive denominator on top of Python's
arbitrary-precision integers.
"""

from __future__ import annotations

import re
from fractions import Fraction
from itertools import product as _cartesian
from typing import Callable, Iterable, Iterator, Mapping

from .errors import ParseError

Rational = Fraction

_Exp = tuple  # (deg_lam, deg_q)


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as a rational")


class Scalar:
    """An element of Q[lam, q] in canonical sparse form.

    ``terms`` maps ``(deg_lam, deg_q)`` to a nonzero Fraction.  Instances are
    immutable and hashable.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[_Exp, object] | None = None):
        clean = {}
        if terms:
            for exp, c in terms.items():
                c = _as_fraction(c)
                if c:
                    clean[(int(exp[0]), int(exp[1]))] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "Scalar":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, value) -> "Scalar":
        c = _as_fraction(value)
        return cls._raw({(0, 0): c} if c else {})

    @classmethod
    def coerce(cls, value) -> "Scalar":
        if isinstance(value, Scalar):
            return value
        return cls.const(value)

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(exp == (0, 0) for exp in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self._terms.get((0, 0), Fraction(0))

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Scalar.const(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for exp, c in other._terms.items():
            s = out.get(exp, 0) + c
            if s:
                out[exp] = s
            else:
                out.pop(exp, None)
        return Scalar._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Scalar._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        if not self._terms or not other._terms:
            return ZERO
        if len(other._terms) == 1 and (0, 0) in other._terms:
            c = other._terms[(0, 0)]
            if c == 1:
                return self
            return Scalar._raw({e: v * c for e, v in self._terms.items()})
        out: dict = {}
        for (e1, c1), (e2, c2) in _cartesian(self._terms.items(), other._terms.items()):
            e = (e1[0] + e2[0], e1[1] + e2[1])
            s = out.get(e, 0) + c1 * c2
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Scalar._raw(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def substitute(self, lam=None, q=None) -> "Scalar":
        return scalar_substitute(self, lam, q)

    def sorted_terms(self) -> list:
        # graded lexicographic, lam > q, highest first
        return sorted(self._terms.items(), key=lambda t: (-(t[0][0] + t[0][1]), -t[0][0]))

    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for (i, j), c in self.sorted_terms():
            mono = []
            if i:
                mono.append("lam" if i == 1 else f"lam^{i}")
            if j:
                mono.append("q" if j == 1 else f"q^{j}")
            mag = abs(c)
            if mono and mag == 1:
                body = "*".join(mono)
            else:
                body = "*".join([str(mag)] + mono)
            pieces.append(("-" if c < 0 else "+", body))
        first_sign, first = pieces[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"Scalar({str(self)!r})"


def _coerce_or_none(value):
    if isinstance(value, Scalar):
        return value
    if isinstance(value, (int, Fraction)):
        return Scalar.const(value)
    return None


ZERO = Scalar._raw({})
ONE = Scalar._raw({(0, 0): Fraction(1)})
LAM = Scalar._raw({(1, 0): Fraction(1)})
Q = Scalar._raw({(0, 1): Fraction(1)})


def scalar_add(a: Scalar, b: Scalar) -> Scalar:
    return a + b


def scalar_mul(a: Scalar, b: Scalar) -> Scalar:
    return a * b


def scalar_substitute(a: Scalar, lam_val=None, q_val=None) -> Scalar:
    """Replace ``lam`` and/or ``q`` by rational values; omitted ones stay formal."""
    if lam_val is None and q_val is None:
        return a
    lv = None if lam_val is None else _as_fraction(lam_val)
    qv = None if q_val is None else _as_fraction(q_val)
    out: dict = {}
    for (i, j), c in a._terms.items():
        if lv is not None:
            c = c * lv ** i
            i = 0
        if qv is not None:
            c = c * qv ** j
            j = 0
        if c:
            s = out.get((i, j), 0) + c
            if s:
                out[(i, j)] = s
            else:
                out.pop((i, j), None)
    return Scalar._raw(out)


# --- text form -----------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<name>lam|q)|(?P<op>[-+*/^()]))")


def parse_scalar(text: str) -> Scalar:
    """Parse the canonical string form (and reasonable variations) of a Scalar.

    Grammar: sums/differences of products of integers, fractions ``a/b``,
    ``lam``, ``q``, powers ``^n`` and parenthesized subexpressions.
    """
    parser = _ScalarParser(text)
    value = parser.parse_sum()
    parser.skip_ws()
    if parser.pos != len(text):
        raise ParseError("unexpected trailing input in scalar", parser.pos, ("+", "-", "*"))
    return value


class _ScalarParser:
    def __init__(self, text: str, offset: int = 0):
        self.text = text
        self.pos = 0
        self.offset = offset

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def error(self, msg, expected):
        raise ParseError(msg, self.offset + self.pos, expected)

    def parse_sum(self) -> Scalar:
        sign = 1
        if self.peek() == "-":
            self.pos += 1
            sign = -1
        total = self.parse_product() * sign
        while self.peek() in ("+", "-") and self.peek():
            op = self.text[self.pos]
            self.pos += 1
            term = self.parse_product()
            total = total + term if op == "+" else total - term
        return total

    def parse_product(self) -> Scalar:
        value = self.parse_power()
        while self.peek() in ("*", "/") and self.peek():
            op = self.text[self.pos]
            self.pos += 1
            rhs = self.parse_power()
            if op == "*":
                value = value * rhs
            else:
                if not rhs.is_constant() or not rhs:
                    self.error("division only by nonzero rational constants", ("integer",))
                value = value * Scalar.const(1 / rhs.constant_value())
        return value

    def parse_power(self) -> Scalar:
        base = self.parse_atom()
        if self.peek() == "^":
            self.pos += 1
            self.skip_ws()
            m = re.match(r"\d+", self.text[self.pos:])
            if not m:
                self.error("expected exponent", ("integer",))
            self.pos += m.end()
            base = base ** int(m.group())
        return base

    def parse_atom(self) -> Scalar:
        self.skip_ws()
        rest = self.text[self.pos:]
        m = re.match(r"\d+", rest)
        if m:
            self.pos += m.end()
            return Scalar.const(int(m.group()))
        if rest.startswith("lam"):
            self.pos += 3
            return LAM
        if rest.startswith("q"):
            self.pos += 1
            return Q
        if rest.startswith("("):
            self.pos += 1
            inner = self.parse_sum()
            if self.peek() != ")":
                self.error("unbalanced parenthesis", (")",))
            self.pos += 1
            return inner
        self.error("expected a scalar atom", ("integer", "lam", "q", "("))


def parse_parameter(text, symbol: Scalar) -> Scalar:
    """``"sym"`` keeps ``symbol`` formal; otherwise a rational such as ``-1/2``."""
    if isinstance(text, Scalar):
        return text
    if isinstance(text, (int, Fraction)):
        return Scalar.const(text)
    text = str(text).strip()
    if text == "sym":
        return symbol
    try:
        return Scalar.const(Fraction(text))
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"parameter must be 'sym' or a rational, got {text!r}", 0, ("sym", "rational"))


# --- linear combinations ---------------------------------------------------


class LinComb:
    """Formal Scalar-linear combination over a totally ordered, hashable basis.

    Stored coefficients are never zero, so equal values have equal
    representations.  Iteration runs in basis order.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping | Iterable | None = None):
        acc: dict = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for basis, coeff in items:
                coeff = Scalar.coerce(coeff)
                if not coeff:
                    continue
                s = acc.get(basis)
                s = coeff if s is None else s + coeff
                if s:
                    acc[basis] = s
                else:
                    del acc[basis]
        self._terms = acc
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "LinComb":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def basis(cls, element, coeff=ONE) -> "LinComb":
        coeff = Scalar.coerce(coeff)
        return cls._raw({element: coeff} if coeff else {})

    @classmethod
    def zero(cls) -> "LinComb":
        return cls._raw({})

    def items(self) -> list:
        return sorted(self._terms.items(), key=lambda kv: kv[0])

    def __iter__(self) -> Iterator:
        return iter(self.items())

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def coeff(self, basis) -> Scalar:
        return self._terms.get(basis, ZERO)

    def support(self) -> list:
        return sorted(self._terms)

    def __eq__(self, other):
        if isinstance(other, LinComb):
            return self._terms == other._terms
        if isinstance(other, int) and other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        if not isinstance(other, LinComb):
            return NotImplemented
        return lincomb_add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return LinComb._raw({b: -c for b, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, LinComb):
            return NotImplemented
        return lincomb_add(self, -other)

    def __rmul__(self, scalar):
        if isinstance(scalar, (Scalar, int, Fraction)):
            return lincomb_scale(Scalar.coerce(scalar), self)
        return NotImplemented

    __mul__ = __rmul__

    def map_coefficients(self, fn: Callable[[Scalar], Scalar]) -> "LinComb":
        return LinComb((b, fn(c)) for b, c in self._terms.items())

    def substitute(self, lam=None, q=None) -> "LinComb":
        return self.map_coefficients(lambda c: scalar_substitute(c, lam, q))

    def render(self, show: Callable = str) -> str:
        if not self._terms:
            return "0"
        parts = []
        for basis, c in self.items():
            if c == ONE:
                parts.append(show(basis))
            elif c == -ONE:
                parts.append("-" + show(basis))
            else:
                parts.append(f"[{c}]{show(basis)}")
        text = parts[0]
        for p in parts[1:]:
            text += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return text

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"LinComb({self.render(repr)})"


class Accumulator:
    """Mutable sum used while building a LinComb inside hot loops."""

    __slots__ = ("terms",)

    def __init__(self):
        self.terms: dict = {}

    def add(self, basis, coeff: Scalar):
        if not coeff:
            return
        s = self.terms.get(basis)
        s = coeff if s is None else s + coeff
        if s:
            self.terms[basis] = s
        else:
            del self.terms[basis]

    def add_lincomb(self, x: LinComb, coeff: Scalar = ONE):
        if coeff == ONE:
            for b, c in x._terms.items():
                self.add(b, c)
        else:
            for b, c in x._terms.items():
                self.add(b, c * coeff)

    def result(self) -> LinComb:
        return LinComb._raw(self.terms)


def lincomb_add(x: LinComb, y: LinComb) -> LinComb:
    if not y._terms:
        return x
    if not x._terms:
        return y
    acc = Accumulator()
    acc.terms = dict(x._terms)
    for b, c in y._terms.items():
        acc.add(b, c)
    return acc.result()


def lincomb_scale(alpha: Scalar, x: LinComb) -> LinComb:
    alpha = Scalar.coerce(alpha)
    if not alpha:
        return LinComb.zero()
    if alpha == ONE:
        return x
    return LinComb._raw({b: alpha * c for b, c in x._terms.items() if alpha * c})


def lincomb_bilinear_extend(f: Callable, x: LinComb, y: LinComb) -> LinComb:
    """Extend ``f`` (basis x basis -> LinComb) bilinearly to ``x`` and ``y``."""
    acc = Accumulator()
    for bx, cx in x._terms.items():
        for by, cy in y._terms.items():
            acc.add_lincomb(f(bx, by), cx * cy)
    return acc.result()


def lincomb_linear_extend(f: Callable, x: LinComb) -> LinComb:
    acc = Accumulator()
    for b, c in x._terms.items():
        acc.add_lincomb(f(b), c)
    return acc.result()
