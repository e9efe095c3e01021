"""Tensor words over differential monomials with the weight-q quasi-shuffle.

``QuasiShuffleAlgebra`` realizes T+(A) for A the free commutative differential
algebra of :mod:`dendriform.diffalg`:

* ``star(a, b)``: the quasi-shuffle of weight q,
* ``prec``, ``succ``, ``bullet``: its three pieces, split by where the first
  letter of the result comes from,
* ``d``: the letterwise subset-sum derivation of weight lam.

With ``shuffle=True`` (q must be 0) the contraction piece is dropped and the
algebra is the commutative differential dendriform algebra of shuffles.
"""

from __future__ import annotations

from typing import Callable, Iterable, Mapping, Protocol

from .diffalg import DiffMonomial, d0_monomial, parse_monomial, subset_increments
from .errors import MorphismPrecondition, ParseError
from .scalars import LAM, ONE, Q, ZERO, Accumulator, LinComb, Scalar, lincomb_bilinear_extend


class TensorWord:
    """A word a1 (x) ... (x) am of monomials; ordered by length, then letters."""

    __slots__ = ("letters", "_hash")

    def __init__(self, letters: Iterable[DiffMonomial]):
        self.letters = tuple(letters)
        self._hash = hash(self.letters)

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        return isinstance(other, TensorWord) and self.letters == other.letters

    def _key(self):
        return (len(self.letters), self.letters)

    def __lt__(self, other):
        return self._key() < other._key()

    def __gt__(self, other):
        return self._key() > other._key()

    def __len__(self):
        return len(self.letters)

    @property
    def head(self) -> DiffMonomial:
        return self.letters[0]

    @property
    def tail(self) -> "TensorWord":
        return TensorWord(self.letters[1:])

    def prepend(self, letter: DiffMonomial) -> "TensorWord":
        return TensorWord((letter,) + self.letters)

    def __str__(self):
        if not self.letters:
            return "<empty>"
        return " (x) ".join(str(m) for m in self.letters)

    def __repr__(self):
        return f"TensorWord({str(self)!r})"

    def to_json(self) -> list:
        return [str(m) for m in self.letters]


EMPTY = TensorWord(())


def word(*letters) -> TensorWord:
    return TensorWord(parse_monomial(m) if isinstance(m, str) else m for m in letters)


def parse_word(text: str) -> TensorWord:
    parts = [p for p in text.split("(x)")]
    if not text.strip() or any(not p.strip() for p in parts):
        raise ParseError(f"malformed tensor word {text!r}", 0, ("monomial",))
    return TensorWord(parse_monomial(p) for p in parts)


def element(*letters) -> LinComb:
    """The basis element given by a word; letters are monomials or their text."""
    return LinComb.basis(word(*letters))


def _prepend_all(letter: DiffMonomial, x: Mapping, coeff: Scalar, acc: Accumulator):
    for w, c in x.items():
        acc.add(w.prepend(letter), c * coeff)


class QuasiShuffleAlgebra:
    """Commutative differential q-tridendriform algebra T+(A)."""

    def __init__(self, lam: Scalar = LAM, q: Scalar = Q, shuffle: bool = False):
        self.lam = Scalar.coerce(lam)
        self.q = Scalar.coerce(q)
        self.shuffle = shuffle
        if shuffle and self.q:
            raise ValueError("the shuffle (dendriform) variant requires q = 0")
        self._star_cache: dict = {}
        self._d_cache: dict = {}

    # -- basis level -------------------------------------------------------

    def _star_words(self, a: TensorWord, b: TensorWord) -> dict:
        """a *_q b on words of T(A); the empty word is the unit."""
        if not a.letters:
            return {b: ONE}
        if not b.letters:
            return {a: ONE}
        key = (a, b)
        hit = self._star_cache.get(key)
        if hit is not None:
            return hit
        acc = Accumulator()
        _prepend_all(a.head, self._star_words(a.tail, b), ONE, acc)
        _prepend_all(b.head, self._star_words(a, b.tail), ONE, acc)
        if self.q:
            _prepend_all(a.head * b.head, self._star_words(a.tail, b.tail), self.q, acc)
        self._star_cache[key] = acc.terms
        return acc.terms

    def _prec_words(self, a, b) -> LinComb:
        acc = Accumulator()
        _prepend_all(a.head, self._star_words(a.tail, b), ONE, acc)
        return acc.result()

    def _succ_words(self, a, b) -> LinComb:
        acc = Accumulator()
        _prepend_all(b.head, self._star_words(a, b.tail), ONE, acc)
        return acc.result()

    def _bullet_words(self, a, b) -> LinComb:
        if self.shuffle:
            return LinComb.zero()
        acc = Accumulator()
        _prepend_all(a.head * b.head, self._star_words(a.tail, b.tail), ONE, acc)
        return acc.result()

    def _star_basis(self, a, b) -> LinComb:
        return LinComb(self._star_words(a, b))

    def _d_word(self, w: TensorWord) -> LinComb:
        hit = self._d_cache.get(w)
        if hit is not None:
            return hit
        acc = Accumulator()
        derived = [d0_monomial(m, self.lam) for m in w.letters]
        for positions, weight in subset_increments(len(w.letters), self.lam):
            # multilinear expansion: each chosen letter becomes a polynomial
            partial = {(): ONE}
            chosen = set(positions)
            for i, m in enumerate(w.letters):
                choices = derived[i]._terms.items() if i in chosen else ((m, ONE),)
                nxt: dict = {}
                for prefix, c in partial.items():
                    for mono, cm in choices:
                        key = prefix + (mono,)
                        nxt[key] = nxt.get(key, ZERO) + c * cm
                partial = nxt
            for letters, c in partial.items():
                acc.add(TensorWord(letters), c * weight)
        res = acc.result()
        self._d_cache[w] = res
        return res

    # -- element level -----------------------------------------------------

    def star(self, x: LinComb, y: LinComb) -> LinComb:
        return lincomb_bilinear_extend(self._star_basis, x, y)

    def prec(self, x: LinComb, y: LinComb) -> LinComb:
        return lincomb_bilinear_extend(self._prec_words, x, y)

    def succ(self, x: LinComb, y: LinComb) -> LinComb:
        return lincomb_bilinear_extend(self._succ_words, x, y)

    def bullet(self, x: LinComb, y: LinComb) -> LinComb:
        return lincomb_bilinear_extend(self._bullet_words, x, y)

    def d(self, x: LinComb) -> LinComb:
        acc = Accumulator()
        for w, c in x._terms.items():
            acc.add_lincomb(self._d_word(w), c)
        return acc.result()

    def zero(self) -> LinComb:
        return LinComb.zero()

    def include(self, p: LinComb) -> LinComb:
        """The embedding A -> T+(A) sending a polynomial to length-1 words."""
        return LinComb((TensorWord((m,)), c) for m, c in p._terms.items())

    def words(self, letters: Iterable[DiffMonomial], max_length: int) -> list:
        """All words of length 1..max_length over ``letters``, in basis order."""
        from itertools import product

        letters = sorted(letters)
        out = []
        for n in range(1, max_length + 1):
            out.extend(TensorWord(p) for p in product(letters, repeat=n))
        return sorted(out)

    def op_table(self):
        from .identities import OpTable

        ops = {"≺": self.prec, "≻": self.succ, "⋆": self.star}
        ops["∗"] = self.star
        ops["•"] = self.bullet
        return OpTable(ops, d=self.d, scalars={"λ": self.lam, "q": self.q},
                       name="shuffle" if self.shuffle else "quasi-shuffle")


class DifferentialTridendriform(Protocol):
    """What a target of the universal maps must provide.

    Elements must support ``+``, ``-``, scalar multiplication and ``==``.
    """

    def prec(self, x, y): ...

    def succ(self, x, y): ...

    def bullet(self, x, y): ...

    def d(self, x): ...

    def zero(self): ...


def psi_bar(psi: Callable[[DiffMonomial], object], target, x: LinComb, source=None,
            check: bool = True):
    """Evaluate the unique morphism T+(A) -> target extending ``psi``.

    A word a1 (x) w' maps to psi(a1) <_T psi_bar(w'); a length-1 word maps to
    psi(a1).  When ``check`` is set, every letter met is tested for
    ``d_T(psi(a)) == psi(d0(a))``.
    """
    lam = source.lam if source is not None else getattr(target, "lam", LAM)
    checked: set = set()

    def psi_lin(p: LinComb):
        total = target.zero()
        for m, c in p._terms.items():
            total = total + c * psi(m)
        return total

    def letter(m: DiffMonomial):
        image = psi(m)
        if check and m not in checked:
            lhs = target.d(image)
            rhs = psi_lin(d0_monomial(m, lam))
            if not lhs == rhs:
                raise MorphismPrecondition(
                    f"d_T(psi({m})) != psi(d0({m})): {lhs} vs {rhs}")
            checked.add(m)
        return image

    cache: dict = {}

    def eval_word(w: TensorWord):
        hit = cache.get(w)
        if hit is not None:
            return hit
        if len(w) == 1:
            res = letter(w.head)
        else:
            res = target.prec(letter(w.head), eval_word(w.tail))
        cache[w] = res
        return res

    total = target.zero()
    for w, c in x._terms.items():
        total = total + c * eval_word(w)
    return total
