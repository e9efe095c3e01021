"""The free differential q-tridendriform algebra on decorated Schröder trees.

Products are computed by recursion on the sum of depths.  For basis trees
t = V(t0..tm; x1..xm) and s = V(s0..sn; y1..yn)::

    t < s = V(t0, ..., t(m-1), tm * s;               x1..xm)
    t > s = V(t * s0, s1, ..., sn;                   y1..yn)
    t . s = V(t0, ..., t(m-1), tm * s0, s1, ..., sn; x1..xm, y1..yn)

where ``u * v`` is the combined product < + > + q . with the boundary rules
``| > v = v < | = v``, the other boundary products zero, and ``| * | = |``.
"""

from __future__ import annotations

from typing import Callable

from .diffalg import subset_increments
from .scalars import LAM, ONE, Q, Accumulator, LinComb, Scalar, lincomb_bilinear_extend
from .trees import Leaf, SchroederNode, Generator, stree, with_decorations_incremented


def _as_element(x):
    if isinstance(x, LinComb):
        return x
    if x is Leaf:
        raise ValueError("the leaf is not a basis element of DT(X)")
    return LinComb.basis(x)


class FreeTridendriform:
    """DT(Delta X) with operations <, >, ., the combined product and d_X."""

    def __init__(self, lam: Scalar = LAM, q: Scalar = Q):
        self.lam = Scalar.coerce(lam)
        self.q = Scalar.coerce(q)
        self._cache = {"prec": {}, "succ": {}, "bullet": {}, "mid": {}}
        self._d_cache: dict = {}

    # -- basis level -------------------------------------------------------

    def _mid(self, u, v) -> dict:
        """u * v for trees that may be the leaf; returns {tree: coeff}."""
        if u is Leaf and v is Leaf:
            return {Leaf: ONE}
        if u is Leaf:
            return {v: ONE}
        if v is Leaf:
            return {u: ONE}
        cache = self._cache["mid"]
        key = (u, v)
        hit = cache.get(key)
        if hit is not None:
            return hit
        acc = Accumulator()
        acc.add_lincomb(self._prec_basis(u, v))
        acc.add_lincomb(self._succ_basis(u, v))
        if self.q:
            acc.add_lincomb(self._bullet_basis(u, v), self.q)
        cache[key] = acc.terms
        return acc.terms

    def _prec_basis(self, t: SchroederNode, s: SchroederNode) -> LinComb:
        cache = self._cache["prec"]
        hit = cache.get((t, s))
        if hit is not None:
            return hit
        head = t.children[:-1]
        acc = Accumulator()
        for u, c in self._mid(t.children[-1], s).items():
            acc.add(SchroederNode(t.decorations, head + (u,)), c)
        res = cache[(t, s)] = acc.result()
        return res

    def _succ_basis(self, t: SchroederNode, s: SchroederNode) -> LinComb:
        cache = self._cache["succ"]
        hit = cache.get((t, s))
        if hit is not None:
            return hit
        tail = s.children[1:]
        acc = Accumulator()
        for u, c in self._mid(t, s.children[0]).items():
            acc.add(SchroederNode(s.decorations, (u,) + tail), c)
        res = cache[(t, s)] = acc.result()
        return res

    def _bullet_basis(self, t: SchroederNode, s: SchroederNode) -> LinComb:
        cache = self._cache["bullet"]
        hit = cache.get((t, s))
        if hit is not None:
            return hit
        head = t.children[:-1]
        tail = s.children[1:]
        decs = t.decorations + s.decorations
        acc = Accumulator()
        for u, c in self._mid(t.children[-1], s.children[0]).items():
            acc.add(SchroederNode(decs, head + (u,) + tail), c)
        res = cache[(t, s)] = acc.result()
        return res

    def _star_basis(self, t, s) -> LinComb:
        return LinComb(self._mid(t, s))

    def _d_basis(self, t) -> LinComb:
        hit = self._d_cache.get(t)
        if hit is not None:
            return hit
        acc = Accumulator()
        for positions, weight in subset_increments(t.n_decorations, self.lam):
            acc.add(with_decorations_incremented(t, [p + 1 for p in positions]), weight)
        res = self._d_cache[t] = acc.result()
        return res

    # -- element level -----------------------------------------------------

    def prec(self, x, y) -> LinComb:
        return lincomb_bilinear_extend(self._prec_basis, _as_element(x), _as_element(y))

    def succ(self, x, y) -> LinComb:
        return lincomb_bilinear_extend(self._succ_basis, _as_element(x), _as_element(y))

    def bullet(self, x, y) -> LinComb:
        return lincomb_bilinear_extend(self._bullet_basis, _as_element(x), _as_element(y))

    def star(self, x, y) -> LinComb:
        return lincomb_bilinear_extend(self._star_basis, _as_element(x), _as_element(y))

    def succ_q(self, x, y) -> LinComb:
        """The dendriform right product > + q . induced on DT(X)."""
        return self.succ(x, y) + self.q * self.bullet(x, y)

    def d(self, x) -> LinComb:
        acc = Accumulator()
        for t, c in _as_element(x)._terms.items():
            acc.add_lincomb(self._d_basis(t), c)
        return acc.result()

    def zero(self) -> LinComb:
        return LinComb.zero()

    def generator(self, x: Generator | str, order: int = 0) -> LinComb:
        return LinComb.basis(stree(x, order))

    def op_table(self):
        from .identities import OpTable

        return OpTable({"≺": self.prec, "≻": self.succ, "•": self.bullet, "⋆": self.star},
                       d=self.d, scalars={"λ": self.lam, "q": self.q}, name="DT")

    def dendriform_table(self):
        """(DT, <, > + q.) as a differential dendriform algebra."""
        from .identities import OpTable

        return OpTable({"≺": self.prec, "≻": self.succ_q,
                        "⋆": lambda a, b: self.prec(a, b) + self.succ_q(a, b)},
                       d=self.d, scalars={"λ": self.lam, "q": self.q}, name="DT(<, >_q)")


def f_bar(f: Callable[[str], object], target, x, cache: dict | None = None):
    """Evaluate the unique morphism DT(Delta X) -> target extending ``f``.

    ``f`` maps a generator name to an element of ``target`` and x^(n) is sent
    to d_T^n(f(x)).  A node V(t0, t1; x1) evaluates as (t0 > x1) < t1; a node
    of breadth m + 1 > 2 as V(t0, t1; x1) . V(|, t2..tm; x2..xm).  Leaf
    factors collapse by the boundary rules.
    """
    if cache is None:
        cache = {}
    gen_cache: dict = {}

    def f_tilde(g: Generator):
        hit = gen_cache.get(g)
        if hit is None:
            if g.order == 0:
                hit = f(g.name)
            else:
                hit = target.d(f_tilde(Generator(g.name, g.order - 1)))
            gen_cache[g] = hit
        return hit

    def ev(t):
        # None stands for the leaf
        if t is Leaf:
            return None
        hit = cache.get(t)
        if hit is not None:
            return hit
        if len(t.decorations) == 1:
            left, right = t.children
            val = f_tilde(t.decorations[0])
            le = ev(left)
            if le is not None:
                val = target.succ(le, val)
            re_ = ev(right)
            if re_ is not None:
                val = target.prec(val, re_)
        else:
            first = SchroederNode(t.decorations[:1], t.children[:2])
            rest = SchroederNode(t.decorations[1:], (Leaf,) + t.children[2:])
            val = target.bullet(ev(first), ev(rest))
        cache[t] = val
        return val

    total = target.zero()
    for t, c in _as_element(x)._terms.items():
        total = total + c * ev(t)
    return total
