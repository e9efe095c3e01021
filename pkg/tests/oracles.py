"""Independent reference implementations used to freeze expected values.

Nothing here calls the package's algorithms; the only shared pieces are
the value types needed to compare answers.  Coefficients are sympy
expressions in ``lam`` and ``q``.
"""

from __future__ import annotations

from itertools import combinations, product

import sympy

lam, q = sympy.symbols("lam q")


# --- scalars ---------------------------------------------------------------


def to_sympy(s) -> sympy.Expr:
    """Package Scalar -> sympy polynomial."""
    return sympy.expand(sum((sympy.Rational(c.numerator, c.denominator) * lam ** i * q ** j
                             for (i, j), c in s.terms.items()), sympy.Integer(0)))


def lincomb_to_dict(x, key=str) -> dict:
    return {key(b): to_sympy(c) for b, c in x.items()}


def clean(d: dict) -> dict:
    out = {}
    for k, v in d.items():
        v = sympy.expand(v)
        if v != 0:
            out[k] = v
    return out


# --- trees by closure --------------------------------------------------------
# A tree is "|" or ("V", decorations, children) with decorations a tuple of
# (name, order) pairs; binary trees use ("B", left, dec, right).


def _leaves(t):
    if t == "|":
        return 1
    if t[0] == "B":
        return _leaves(t[1]) + _leaves(t[3])
    return sum(_leaves(c) for c in t[2])


def _bounded_tuples(pool, k, budget):
    """k-tuples from pool whose leaf counts add up to at most budget."""
    if k == 0:
        yield ()
        return
    for t in pool:
        n = _leaves(t)
        if n + (k - 1) <= budget:
            for rest in _bounded_tuples(pool, k - 1, budget - n):
                yield (t,) + rest


def schroeder_closure(alphabet, max_leaves: int) -> dict:
    """Grow the set of Schröder trees by grafting until nothing new appears."""
    found = {"|"}
    while True:
        new = set()
        pool = sorted(found, key=repr)
        for m in range(1, max_leaves):
            for kids in _bounded_tuples(pool, m + 1, max_leaves):
                for decs in product(alphabet, repeat=m):
                    t = ("V", decs, kids)
                    if t not in found:
                        new.add(t)
        if not new:
            break
        found |= new
    by_leaves: dict = {}
    for t in found:
        by_leaves.setdefault(_leaves(t), set()).add(t)
    return by_leaves


def binary_closure(alphabet, max_leaves: int) -> dict:
    found = {"|"}
    while True:
        new = set()
        pool = list(found)
        for left in pool:
            for right in pool:
                if _leaves(left) + _leaves(right) > max_leaves:
                    continue
                for x in alphabet:
                    t = ("B", left, x, right)
                    if t not in found:
                        new.add(t)
        if not new:
            break
        found |= new
    by_leaves: dict = {}
    for t in found:
        by_leaves.setdefault(_leaves(t), set()).add(t)
    return by_leaves


def render(t) -> str:
    """The text grammar, written out independently of the package printer."""
    if t == "|":
        return "|"
    if t[0] == "B":
        return f"[{render(t[1])} {t[2][0]}^({t[2][1]}) {render(t[3])}]"
    decs = ",".join(f"{n}^({o})" for n, o in t[1])
    return "(V " + decs + "; " + " ".join(render(c) for c in t[2]) + ")"


# --- differential polynomials -------------------------------------------------
# A monomial is a sorted tuple of (name, order); a polynomial a dict of those.


def _mono_mul(u, v):
    return tuple(sorted(u + v))


def poly_mul(p: dict, r: dict) -> dict:
    out: dict = {}
    for u, a in p.items():
        for v, b in r.items():
            k = _mono_mul(u, v)
            out[k] = out.get(k, 0) + a * b
    return clean(out)


def poly_add(*ps) -> dict:
    out: dict = {}
    for p in ps:
        for k, v in p.items():
            out[k] = out.get(k, 0) + v
    return clean(out)


def poly_scale(c, p: dict) -> dict:
    return clean({k: c * v for k, v in p.items()})


def leibniz_d(p: dict) -> dict:
    """Weighted derivation by the two-factor rule d(uv) = du v + u dv + lam du dv."""
    out: list = []
    for m, c in p.items():
        out.append(poly_scale(c, _leibniz_mono(m)))
    return poly_add(*out)


def _leibniz_mono(m) -> dict:
    if not m:
        return {}
    if len(m) == 1:
        (name, order), = m
        return {((name, order + 1),): sympy.Integer(1)}
    u, v = {m[:1]: sympy.Integer(1)}, {m[1:]: sympy.Integer(1)}
    du, dv = _leibniz_mono(m[:1]), _leibniz_mono(m[1:])
    return poly_add(poly_mul(du, v), poly_mul(u, dv), poly_scale(lam, poly_mul(du, dv)))


def monomial_key(m) -> tuple:
    """Package DiffMonomial -> sorted tuple of (name, order)."""
    return tuple(sorted((v.name, v.order) for v in m.factors))


# --- quasi-shuffles by placement ---------------------------------------------
# Words are tuples of monomial keys.  A quasi-shuffle of u and v is a choice of
# k slots and of sets S, T with |S| = len(u), |T| = len(v), S | T = all slots;
# slots in both sets multiply the two letters and carry a factor q.


def stuffles(u: tuple, v: tuple):
    m, n = len(u), len(v)
    for k in range(max(m, n), m + n + 1):
        slots = range(k)
        for S in combinations(slots, m):
            rest = [s for s in slots if s not in S]
            need = n - len(rest)
            if need < 0:
                continue
            for shared in combinations(S, need):
                T = sorted(rest + list(shared))
                yield k, S, T


def _assemble(u, v, k, S, T):
    word = []
    iu = iv = 0
    both = 0
    for s in range(k):
        in_u, in_v = s in S, s in T
        if in_u and in_v:
            word.append(_mono_mul(u[iu], v[iv]))
            iu += 1
            iv += 1
            both += 1
        elif in_u:
            word.append(u[iu])
            iu += 1
        else:
            word.append(v[iv])
            iv += 1
    return tuple(word), q ** both


def quasi_shuffle(u: tuple, v: tuple, first=None) -> dict:
    """u *_q v; ``first`` restricts the first slot to 'u', 'v' or 'both'."""
    out: dict = {}
    for k, S, T in stuffles(u, v):
        zero_u, zero_v = 0 in S, 0 in T
        kind = "both" if zero_u and zero_v else ("u" if zero_u else "v")
        if first is not None and kind != first:
            continue
        w, c = _assemble(u, v, k, S, T)
        out[w] = out.get(w, 0) + c
    return clean(out)


def word_key(w) -> tuple:
    """Package TensorWord -> tuple of monomial keys."""
    return tuple(monomial_key(m) for m in w.letters)


# --- linear algebra ------------------------------------------------------------


def sympy_rank_and_nullity(rows: list, ncols: int) -> tuple:
    if not rows:
        return 0, ncols
    M = sympy.Matrix(rows)
    r = M.rank()
    return r, ncols - r


# --- random expression trees ---------------------------------------------------


def random_expr(rng, depth: int = 4):
    """A random AST over the term grammar; never a one-term positive Sum."""
    from dendriform.expr import Atom, Bin, D, Scaled, Sum
    from dendriform.scalars import LAM, Q, Scalar
    from fractions import Fraction

    def scalar():
        c = Scalar.const(Fraction(rng.randint(-9, 9), rng.randint(1, 5)))
        if rng.random() < 0.5:
            c = c + rng.choice([LAM, Q, LAM * Q, Q ** 2])
        return c

    def go(d):
        r = rng.random()
        if d == 0 or r < 0.25:
            return Atom(rng.choice(["x", "y", "z", "d", "u1"]), rng.choice([0, 0, 1, 2, 11]))
        if r < 0.55:
            return Bin(rng.choice(["<:", ":>", ".", "*"]), go(d - 1), go(d - 1))
        if r < 0.7:
            return D(go(d - 1))
        if r < 0.8:
            return Scaled(scalar(), go(d - 1))
        n = rng.randint(1, 3)
        terms = [(rng.choice([1, -1]), go(d - 1)) for _ in range(n)]
        if n == 1:
            terms[0] = (-1, terms[0][1])
        return Sum(tuple(terms))

    return go(depth)
