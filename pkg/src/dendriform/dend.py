"""The free differential dendriform algebra on decorated planar binary trees.

For t = tl v_x tr and s = sl v_y sr::

    t < s = tl v_x (tr < s + tr > s)
    t > s = (t < sl + t > sl) v_y sr

with ``| > s = s < | = s`` and ``| < s = s > | = 0``.  Built independently of
:mod:`dendriform.tridend`; the two are cross-checked through the embedding of
binary trees as Schröder trees with binary nodes.
"""

from __future__ import annotations

from typing import Callable

from .diffalg import subset_increments
from .scalars import LAM, ONE, Accumulator, LinComb, Scalar, lincomb_bilinear_extend
from .trees import BinaryNode, Generator, Leaf, btree, with_decorations_incremented


def _as_element(x):
    if isinstance(x, LinComb):
        return x
    if x is Leaf:
        raise ValueError("the leaf is not a basis element of DD(X)")
    return LinComb.basis(x)


class FreeDendriform:
    """DD(Delta X) with operations <, > and the derivation d_X of weight lam."""

    def __init__(self, lam: Scalar = LAM):
        self.lam = Scalar.coerce(lam)
        self._sum_cache: dict = {}
        self._prec_cache: dict = {}
        self._succ_cache: dict = {}
        self._d_cache: dict = {}

    def _sum(self, u, v) -> dict:
        """u < v + u > v where at most one argument is the leaf."""
        if u is Leaf:
            return {v: ONE}
        if v is Leaf:
            return {u: ONE}
        hit = self._sum_cache.get((u, v))
        if hit is not None:
            return hit
        acc = Accumulator()
        acc.add_lincomb(self._prec_basis(u, v))
        acc.add_lincomb(self._succ_basis(u, v))
        self._sum_cache[(u, v)] = acc.terms
        return acc.terms

    def _prec_basis(self, t: BinaryNode, s: BinaryNode) -> LinComb:
        hit = self._prec_cache.get((t, s))
        if hit is not None:
            return hit
        acc = Accumulator()
        for u, c in self._sum(t.right, s).items():
            acc.add(BinaryNode(t.left, t.decoration, u), c)
        res = self._prec_cache[(t, s)] = acc.result()
        return res

    def _succ_basis(self, t: BinaryNode, s: BinaryNode) -> LinComb:
        hit = self._succ_cache.get((t, s))
        if hit is not None:
            return hit
        acc = Accumulator()
        for u, c in self._sum(t, s.left).items():
            acc.add(BinaryNode(u, s.decoration, s.right), c)
        res = self._succ_cache[(t, s)] = acc.result()
        return res

    def _d_basis(self, t) -> LinComb:
        hit = self._d_cache.get(t)
        if hit is not None:
            return hit
        acc = Accumulator()
        for positions, weight in subset_increments(t.n_decorations, self.lam):
            acc.add(with_decorations_incremented(t, [p + 1 for p in positions]), weight)
        res = self._d_cache[t] = acc.result()
        return res

    def prec(self, x, y) -> LinComb:
        return lincomb_bilinear_extend(self._prec_basis, _as_element(x), _as_element(y))

    def succ(self, x, y) -> LinComb:
        return lincomb_bilinear_extend(self._succ_basis, _as_element(x), _as_element(y))

    def star(self, x, y) -> LinComb:
        return self.prec(x, y) + self.succ(x, y)

    def d(self, x) -> LinComb:
        acc = Accumulator()
        for t, c in _as_element(x)._terms.items():
            acc.add_lincomb(self._d_basis(t), c)
        return acc.result()

    def zero(self) -> LinComb:
        return LinComb.zero()

    def generator(self, x: Generator | str, order: int = 0) -> LinComb:
        return LinComb.basis(btree(x, order))

    def op_table(self):
        from .identities import OpTable

        return OpTable({"≺": self.prec, "≻": self.succ, "⋆": self.star}, d=self.d,
                       scalars={"λ": self.lam}, name="DD")


def f_bar(f: Callable[[str], object], target, x, cache: dict | None = None):
    """Evaluate the unique morphism DD(Delta X) -> target extending ``f``.

    tl v_x tr evaluates as (tl > f~(x)) < tr with f~(x^(n)) = d_T^n(f(x)); a
    leaf operand drops out by the boundary rules.
    """
    if cache is None:
        cache = {}
    gen_cache: dict = {}

    def f_tilde(g: Generator):
        hit = gen_cache.get(g)
        if hit is None:
            hit = f(g.name) if g.order == 0 else target.d(f_tilde(Generator(g.name, g.order - 1)))
            gen_cache[g] = hit
        return hit

    def ev(t):
        if t is Leaf:
            return None
        hit = cache.get(t)
        if hit is not None:
            return hit
        val = f_tilde(t.decoration)
        le = ev(t.left)
        if le is not None:
            val = target.succ(le, val)
        re_ = ev(t.right)
        if re_ is not None:
            val = target.prec(val, re_)
        cache[t] = val
        return val

    total = target.zero()
    for t, c in _as_element(x)._terms.items():
        total = total + c * ev(t)
    return total


def embed(x: LinComb) -> LinComb:
    """Send binary trees to Schröder trees with 2-child nodes, linearly."""
    from .trees import to_schroeder

    return LinComb((to_schroeder(t), c) for t, c in x._terms.items())
