"""The free commutative differential algebra of weight lam on a set of variables.

Elements are polynomials in differential variables ``y^(n)``.  The derivation
``d0`` is defined on each monomial by the subset-sum formula: for every
nonempty set S of factor positions, increment the orders at S and weight the
result by ``lam^(|S|-1)``.  The same formula drives the derivations on tensor
words and on decorated trees.
"""

from __future__ import annotations

import re
from itertools import combinations
from typing import Iterable, NamedTuple

from .errors import DerivOrderOverflow, ParseError
from .scalars import LAM, ONE, Accumulator, LinComb, Scalar, lincomb_bilinear_extend

#: Largest derivation order any variable or decoration may reach.
ORDER_LIMIT = 32


def set_order_limit(n: int) -> None:
    global ORDER_LIMIT
    if n < 0:
        raise ValueError("order limit must be nonnegative")
    ORDER_LIMIT = n


class DiffVar(NamedTuple):
    """A differential variable ``name^(order)``; ordered by name, then order."""

    name: str
    order: int = 0

    def __str__(self):
        return f"{self.name}^({self.order})"

    def bumped(self, by: int = 1) -> "DiffVar":
        n = self.order + by
        if n > ORDER_LIMIT:
            raise DerivOrderOverflow(f"order of {self.name} would reach {n} > limit {ORDER_LIMIT}")
        return DiffVar(self.name, n)


_VAR = re.compile(r"\s*([A-Za-z_][A-Za-z0-9_]*)\s*(?:\^\s*\(\s*(\d+)\s*\))?\s*")


def parse_var(text: str) -> DiffVar:
    m = _VAR.fullmatch(text)
    if not m:
        raise ParseError(f"not a differential variable: {text!r}", 0, ("name", "name^(n)"))
    return DiffVar(m.group(1), int(m.group(2) or 0))


class DiffMonomial:
    """A commutative monomial: a sorted multiset of DiffVars (empty = unit)."""

    __slots__ = ("factors", "_hash")

    def __init__(self, factors: Iterable[DiffVar] = ()):
        self.factors = tuple(sorted(factors))
        self._hash = hash(self.factors)

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        return isinstance(other, DiffMonomial) and self.factors == other.factors

    def _key(self):
        return (len(self.factors), self.factors)

    def __lt__(self, other):
        return self._key() < other._key()

    def __le__(self, other):
        return self._key() <= other._key()

    def __gt__(self, other):
        return self._key() > other._key()

    def __ge__(self, other):
        return self._key() >= other._key()

    @property
    def degree(self) -> int:
        return len(self.factors)

    def __mul__(self, other: "DiffMonomial") -> "DiffMonomial":
        return DiffMonomial(self.factors + other.factors)

    def __str__(self):
        if not self.factors:
            return "1"
        return "*".join(str(v) for v in self.factors)

    def __repr__(self):
        return f"DiffMonomial({str(self)!r})"


UNIT = DiffMonomial()


def monomial(*vars_: DiffVar | str) -> DiffMonomial:
    return DiffMonomial(parse_var(v) if isinstance(v, str) else v for v in vars_)


def parse_monomial(text: str) -> DiffMonomial:
    """Inverse of ``str``; accepts ``1``, ``y^(2)*z`` and ``y^(0)^3`` grouping."""
    text = text.strip()
    if text == "1":
        return UNIT
    factors = []
    for piece in text.split("*"):
        piece = piece.strip()
        m = re.fullmatch(r"(.+?\))\s*\^\s*(\d+)", piece)
        if m and "^(" in m.group(1):
            factors.extend([parse_var(m.group(1))] * int(m.group(2)))
        else:
            factors.append(parse_var(piece))
    return DiffMonomial(factors)


def var_poly(v: DiffVar | str) -> LinComb:
    return LinComb.basis(monomial(v))


def poly_mul(p: LinComb, r: LinComb) -> LinComb:
    return lincomb_bilinear_extend(lambda u, v: LinComb.basis(u * v), p, r)


def subset_increments(n: int, lam: Scalar):
    """Yield ``(positions, weight)`` for every nonempty subset of ``range(n)``
    with weight ``lam^(|S|-1)``."""
    weight = ONE
    for k in range(1, n + 1):
        for positions in combinations(range(n), k):
            yield positions, weight
        weight = weight * lam


def d0_monomial(m: DiffMonomial, lam: Scalar = LAM) -> LinComb:
    acc = Accumulator()
    factors = m.factors
    for positions, weight in subset_increments(len(factors), lam):
        chosen = set(positions)
        new = [v.bumped() if i in chosen else v for i, v in enumerate(factors)]
        acc.add(DiffMonomial(new), weight)
    return acc.result()


def d0(p: LinComb, lam: Scalar = LAM) -> LinComb:
    """Weighted derivation of weight ``lam`` on polynomials in ``y^(n)``."""
    acc = Accumulator()
    for m, c in p._terms.items():
        acc.add_lincomb(d0_monomial(m, lam), c)
    return acc.result()


def leibniz_d0(p: LinComb, lam: Scalar = LAM) -> LinComb:
    """Pairwise weighted Leibniz recursion; kept as an independent check of ``d0``.

    Splits each monomial as (first factor) * (rest) and applies
    ``d(ab) = d(a)b + a d(b) + lam d(a) d(b)``.
    """
    acc = Accumulator()
    for m, c in p._terms.items():
        acc.add_lincomb(_leibniz_monomial(m, lam), c)
    return acc.result()


def _leibniz_monomial(m: DiffMonomial, lam: Scalar) -> LinComb:
    if not m.factors:
        return LinComb.zero()
    if len(m.factors) == 1:
        return LinComb.basis(DiffMonomial([m.factors[0].bumped()]))
    a = LinComb.basis(DiffMonomial(m.factors[:1]))
    b = LinComb.basis(DiffMonomial(m.factors[1:]))
    da = _leibniz_monomial(DiffMonomial(m.factors[:1]), lam)
    db = _leibniz_monomial(DiffMonomial(m.factors[1:]), lam)
    return poly_mul(da, b) + poly_mul(a, db) + lam * poly_mul(da, db)


class DiffPolyAlgebra:
    """The commutative differential algebra (A, d0) of weight ``lam``."""

    def __init__(self, lam: Scalar = LAM):
        self.lam = lam

    def mul(self, p: LinComb, r: LinComb) -> LinComb:
        return poly_mul(p, r)

    def d(self, p: LinComb) -> LinComb:
        return d0(p, self.lam)

    def monomials(self, names: Iterable[str], max_order: int, max_degree: int,
                  min_degree: int = 0) -> list:
        """All monomials over ``names`` with orders <= max_order, in basis order."""
        from itertools import combinations_with_replacement

        vars_ = sorted(DiffVar(n, o) for n in names for o in range(max_order + 1))
        out = []
        for deg in range(min_degree, max_degree + 1):
            out.extend(DiffMonomial(c) for c in combinations_with_replacement(vars_, deg))
        return sorted(out)
