"""Valently decorated Schröder trees and decorated planar binary trees.

Text grammar (exact on output, whitespace-tolerant on input)::

    Leaf            |
    Schröder node   (V d1,...,dm; c0 c1 ... cm)
    binary node     [cl d cr]

with each decoration ``d`` written ``name^(order)`` (a bare ``name`` parses
as order 0).  Decorations are numbered in planar left-to-right order: an
in-order traversal that visits child 0, decoration 1, child 1, ..., child m.
"""

from __future__ import annotations

import re
from itertools import product
from typing import Iterable, Sequence

from .diffalg import DiffVar
from .errors import ArityMismatch, IndexOutOfRange, LeafHasNoBreadth, ParseError

Generator = DiffVar


def gen(name: str, order: int = 0) -> Generator:
    return Generator(name, order)


def make_alphabet(names: Iterable[str], max_order: int = 0) -> list:
    return sorted(Generator(n, o) for n in names for o in range(max_order + 1))


class _Leaf:
    """The one-leaf tree ``|``, shared by both tree families."""

    __slots__ = ()
    leaves = 1
    depth = 0
    n_decorations = 0
    key = (1, 0, (), ())
    decorations = ()
    children = ()

    def __repr__(self):
        return "Leaf"

    def __str__(self):
        return "|"

    def __hash__(self):
        return 0

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return self.key < other.key

    def __gt__(self, other):
        return self.key > other.key


Leaf = _Leaf()


class _TreeBase:
    __slots__ = ("leaves", "depth", "n_decorations", "key", "_hash")

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        return type(other) is type(self) and self.key == other.key

    def __lt__(self, other):
        return self.key < other.key

    def __gt__(self, other):
        return self.key > other.key

    def __le__(self, other):
        return self.key <= other.key

    def __ge__(self, other):
        return self.key >= other.key

    def __repr__(self):
        return f"{type(self).__name__}({serialize(self)!r})"

    def __str__(self):
        return serialize(self)


class SchroederNode(_TreeBase):
    """A root with m >= 1 decorations and m + 1 children."""

    __slots__ = ("decorations", "children")

    def __init__(self, decorations: Sequence[Generator], children: Sequence):
        decorations = tuple(decorations)
        children = tuple(children)
        if not decorations or len(children) != len(decorations) + 1:
            raise ArityMismatch(
                f"{len(decorations)} decoration(s) need {len(decorations) + 1} children, got {len(children)}")
        self.decorations = decorations
        self.children = children
        self.leaves = sum(c.leaves for c in children)
        self.depth = 1 + max(c.depth for c in children)
        self.n_decorations = len(decorations) + sum(c.n_decorations for c in children)
        self.key = (self.leaves, len(children), decorations, tuple(c.key for c in children))
        self._hash = hash(self.key)


class BinaryNode(_TreeBase):
    """tl v_x tr: a root decorated by one generator with two children."""

    __slots__ = ("left", "decoration", "right")

    def __init__(self, left, decoration: Generator, right):
        self.left = left
        self.decoration = decoration
        self.right = right
        self.leaves = left.leaves + right.leaves
        self.depth = 1 + max(left.depth, right.depth)
        self.n_decorations = 1 + left.n_decorations + right.n_decorations
        self.key = (self.leaves, 2, (decoration,), (left.key, right.key))
        self._hash = hash(self.key)

    @property
    def decorations(self):
        return (self.decoration,)

    @property
    def children(self):
        return (self.left, self.right)



# --- construction and decomposition ---------------------------------------


def graft(children: Sequence, decorations: Sequence[Generator]) -> SchroederNode:
    """Join ``children`` under a new root decorated by ``decorations``."""
    return SchroederNode(decorations, children)


def decompose(t: SchroederNode) -> tuple:
    """Inverse of :func:`graft`: ``(children, decorations)``."""
    if t is Leaf:
        raise ValueError("the leaf has no root decomposition")
    return t.children, t.decorations


def stree(x: Generator | str, order: int = 0) -> SchroederNode:
    """The single-vertex Schröder tree decorated by ``x``."""
    if isinstance(x, str):
        x = Generator(x, order)
    return SchroederNode((x,), (Leaf, Leaf))


def btree(x: Generator | str, order: int = 0) -> BinaryNode:
    if isinstance(x, str):
        x = Generator(x, order)
    return BinaryNode(Leaf, x, Leaf)


def to_schroeder(t):
    """The embedding of binary trees into Schröder trees with 2-child nodes."""
    if t is Leaf:
        return Leaf
    return SchroederNode((t.decoration,), (to_schroeder(t.left), to_schroeder(t.right)))


def depth(t) -> int:
    return t.depth


def breadth(t) -> int:
    if t is Leaf:
        raise LeafHasNoBreadth("breadth is defined only for non-leaf trees")
    return len(t.children)


def leaf_count(t) -> int:
    return t.leaves


# --- decorations -----------------------------------------------------------


def decorations_in_planar_order(t) -> list:
    out: list = []
    _collect(t, out)
    return out


def _collect(t, out):
    if t is Leaf:
        return
    kids = t.children
    decs = t.decorations
    for i, dec in enumerate(decs):
        _collect(kids[i], out)
        out.append(dec)
    _collect(kids[-1], out)


def with_decorations_incremented(t, positions: Iterable[int]):
    """Add one to the order of each decoration at the given 1-based positions."""
    positions = set(positions)
    n = t.n_decorations
    for p in positions:
        if not 1 <= p <= n:
            raise IndexOutOfRange(f"decoration position {p} outside 1..{n}")
    if not positions:
        return t
    counter = [0]
    return _rebuild(t, positions, counter)


def _rebuild(t, positions, counter):
    if t is Leaf:
        return t
    kids = t.children
    new_kids = []
    new_decs = []
    for i, dec in enumerate(t.decorations):
        new_kids.append(_rebuild(kids[i], positions, counter))
        counter[0] += 1
        new_decs.append(dec.bumped() if counter[0] in positions else dec)
    new_kids.append(_rebuild(kids[-1], positions, counter))
    if isinstance(t, BinaryNode):
        return BinaryNode(new_kids[0], new_decs[0], new_kids[1])
    return SchroederNode(new_decs, new_kids)


# --- enumeration -----------------------------------------------------------


def _compositions(n: int, parts: int):
    if parts == 1:
        yield (n,)
        return
    for first in range(1, n - parts + 2):
        for rest in _compositions(n - first, parts - 1):
            yield (first,) + rest


def enumerate_schroeder(alphabet: Sequence[Generator], n_leaves: int) -> list:
    """All decorated Schröder trees with ``n_leaves`` leaves, in canonical order."""
    if n_leaves < 1:
        raise ValueError("n_leaves must be at least 1")
    alphabet = sorted(set(alphabet))
    table = {1: [Leaf]}
    for n in range(2, n_leaves + 1):
        trees = []
        for m in range(1, n):
            for comp in _compositions(n, m + 1):
                for kids in product(*(table[c] for c in comp)):
                    for decs in product(alphabet, repeat=m):
                        trees.append(SchroederNode(decs, kids))
        table[n] = sorted(trees)
    return table[n_leaves]


def enumerate_binary(alphabet: Sequence[Generator], n_leaves: int) -> list:
    """All decorated planar binary trees with ``n_leaves`` leaves, in canonical order."""
    if n_leaves < 1:
        raise ValueError("n_leaves must be at least 1")
    alphabet = sorted(set(alphabet))
    table = {1: [Leaf]}
    for n in range(2, n_leaves + 1):
        trees = []
        for k in range(1, n):
            for left in table[k]:
                for right in table[n - k]:
                    for x in alphabet:
                        trees.append(BinaryNode(left, x, right))
        table[n] = sorted(trees)
    return table[n_leaves]


# --- text and JSON forms ---------------------------------------------------


def serialize(t) -> str:
    if t is Leaf:
        return "|"
    if isinstance(t, BinaryNode):
        return f"[{serialize(t.left)} {t.decoration} {serialize(t.right)}]"
    decs = ",".join(str(x) for x in t.decorations)
    kids = " ".join(serialize(c) for c in t.children)
    return f"(V {decs}; {kids})"


_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


class _TreeParser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def expect(self, ch):
        self.ws()
        if not self.text.startswith(ch, self.pos):
            raise ParseError(f"expected {ch!r}", self.pos, (ch,))
        self.pos += len(ch)

    def generator(self) -> Generator:
        self.ws()
        m = _NAME.match(self.text, self.pos)
        if not m:
            raise ParseError("expected a decoration name", self.pos, ("name",))
        self.pos = m.end()
        self.ws()
        order = 0
        if self.text.startswith("^", self.pos):
            self.pos += 1
            self.expect("(")
            self.ws()
            m2 = re.compile(r"\d+").match(self.text, self.pos)
            if not m2:
                raise ParseError("expected an order", self.pos, ("integer",))
            self.pos = m2.end()
            order = int(m2.group())
            self.expect(")")
        return Generator(m.group(), order)

    def tree(self):
        self.ws()
        if self.pos >= len(self.text):
            raise ParseError("unexpected end of input", self.pos, ("|", "(V", "["))
        ch = self.text[self.pos]
        if ch == "|":
            self.pos += 1
            return Leaf
        if ch == "[":
            self.pos += 1
            left = self.tree()
            dec = self.generator()
            right = self.tree()
            self.expect("]")
            return BinaryNode(left, dec, right)
        if ch == "(":
            self.pos += 1
            self.expect("V")
            decs = [self.generator()]
            self.ws()
            while self.text.startswith(",", self.pos):
                self.pos += 1
                decs.append(self.generator())
                self.ws()
            self.expect(";")
            kids = []
            while True:
                self.ws()
                if self.text.startswith(")", self.pos):
                    self.pos += 1
                    break
                kids.append(self.tree())
            return SchroederNode(decs, kids)
        raise ParseError(f"unexpected character {ch!r}", self.pos, ("|", "(V", "["))


def parse_tree(text: str):
    p = _TreeParser(text)
    t = p.tree()
    p.ws()
    if p.pos != len(text):
        raise ParseError("trailing input after tree", p.pos, ("end of input",))
    return t


def tree_to_json(t):
    if t is Leaf:
        return "|"
    if isinstance(t, BinaryNode):
        return ["B", tree_to_json(t.left), str(t.decoration), tree_to_json(t.right)]
    return ["V", [str(x) for x in t.decorations], [tree_to_json(c) for c in t.children]]


def tree_from_json(obj):
    from .diffalg import parse_var

    if obj == "|":
        return Leaf
    tag = obj[0]
    if tag == "B":
        return BinaryNode(tree_from_json(obj[1]), parse_var(obj[2]), tree_from_json(obj[3]))
    if tag == "V":
        return SchroederNode([parse_var(s) for s in obj[1]], [tree_from_json(c) for c in obj[2]])
    raise ParseError(f"unknown JSON tree tag {tag!r}", 0, ("B", "V"))
