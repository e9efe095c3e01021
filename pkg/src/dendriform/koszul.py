"""Koszul duality for the quadratic parts of (tri)dendriform operads.

The weight-2 space over an operation alphabet V has basis

    Left(μ, ν)  = (a ·μ b) ·ν c,      Right(μ, ν) = a ·μ (b ·ν c)

so it has dimension 2|V|².  The pairing with the space over the dual
alphabet is +1 on matching Left terms, -1 on matching Right terms and 0
elsewhere.  Relation vectors are read off the identity library by formal
evaluation, with q substituted to a rational first.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple, Sequence

from . import identities as ids
from .errors import AlphabetMismatch, ConfigError, ZeroQ
from .identities import OpTable
from .scalars import LinComb, Scalar

LEFT = "L"
RIGHT = "R"

PRIMAL_OPS = ("≺", "≻", "•")
DUAL_OPS = ("⊣", "⊢", "⊥")
DUAL_OF = dict(zip(PRIMAL_OPS, DUAL_OPS))
DUAL_OF.update({v: k for k, v in DUAL_OF.items()})

# kind -> (identity list, operation alphabet)
KINDS = {
    "dendriform": (ids.DENDRIFORM, ("≺", "≻")),
    "diassociative": (ids.DIASSOCIATIVE, ("⊣", "⊢")),
    "q_tridendriform": (ids.Q_TRIDENDRIFORM, PRIMAL_OPS),
    "q_triassociative": (ids.Q_TRIASSOCIATIVE, DUAL_OPS),
}
DUAL_KIND = {"dendriform": "diassociative", "q_tridendriform": "q_triassociative",
             "diassociative": "dendriform", "q_triassociative": "q_tridendriform"}


class QuadTerm(NamedTuple):
    shape: str  # LEFT or RIGHT
    mu: str
    nu: str

    def __str__(self):
        if self.shape == LEFT:
            return f"(a{self.mu}b){self.nu}c"
        return f"a{self.mu}(b{self.nu}c)"


class RelationVector:
    """A vector in the weight-2 space: QuadTerm -> Fraction, no zero entries."""

    __slots__ = ("alphabet", "coeffs", "label")

    def __init__(self, alphabet: Sequence[str], coeffs: dict, label: str = ""):
        self.alphabet = tuple(alphabet)
        self.coeffs = {t: Fraction(c) for t, c in coeffs.items() if c}
        self.label = label
        for t in self.coeffs:
            if t.mu not in self.alphabet or t.nu not in self.alphabet:
                raise AlphabetMismatch(f"{t} uses an operation outside {self.alphabet}")

    def __eq__(self, other):
        return isinstance(other, RelationVector) and self.coeffs == other.coeffs

    def __repr__(self):
        return f"RelationVector({self.label!r}: {self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for t in space_basis(self.alphabet):
            c = self.coeffs.get(t)
            if c:
                parts.append(f"{c}*{t}")
        return " + ".join(parts)

    def to_dict(self) -> dict:
        return {str(t): str(c) for t, c in sorted(self.coeffs.items())}


def space_basis(alphabet: Sequence[str]) -> list:
    return [QuadTerm(s, m, n) for s in (LEFT, RIGHT) for m in alphabet for n in alphabet]


def _dual_alphabet(alphabet):
    try:
        return tuple(DUAL_OF[o] for o in alphabet)
    except KeyError:
        raise AlphabetMismatch(f"no dual known for alphabet {alphabet}") from None


def pairing(u: RelationVector, v: RelationVector) -> Fraction:
    """<u, v>: +1 on matching Left terms, -1 on matching Right terms."""
    if len(u.alphabet) != len(v.alphabet) or _dual_alphabet(u.alphabet) != v.alphabet:
        raise AlphabetMismatch(f"alphabets {u.alphabet} and {v.alphabet} are not dual")
    total = Fraction(0)
    for t, c in u.coeffs.items():
        w = v.coeffs.get(QuadTerm(t.shape, DUAL_OF[t.mu], DUAL_OF[t.nu]))
        if w:
            total += c * w if t.shape == LEFT else -c * w
    return total


# --- relations from the identity library ----------------------------------


def _formal_table(alphabet, q) -> OpTable:
    def make(sym):
        def op(x, y):
            acc = {}
            for tx, cx in x._terms.items():
                for ty, cy in y._terms.items():
                    key = (sym, tx, ty)
                    acc[key] = acc.get(key, 0) + cx * cy
            return LinComb(acc)
        return op

    return OpTable({s: make(s) for s in alphabet}, scalars={"q": Scalar.coerce(q)},
                   name="formal")


def _to_quadterm(term) -> QuadTerm:
    nu, left, right = term
    if len(left) == 3 and len(right) == 1:
        return QuadTerm(LEFT, left[0], nu)
    if len(left) == 1 and len(right) == 3:
        return QuadTerm(RIGHT, nu, right[0])
    raise ValueError(f"term {term} is not a quadratic monomial in a, b, c")


def build_relations(kind: str, q=1) -> list:
    """The relation vectors of ``kind`` with the parameter set to the rational ``q``."""
    try:
        identity_list, alphabet = KINDS[kind]
    except KeyError:
        raise ConfigError(f"unknown relation kind {kind!r}; known: {sorted(KINDS)}") from None
    q = Fraction(q)
    table = _formal_table(alphabet, q)
    args = [LinComb.basis((v,)) for v in ("a", "b", "c")]
    out = []
    for ident in identity_list:
        diff = ident.evaluate(table, args)
        coeffs = {_to_quadterm(t): c.constant_value() for t, c in diff._terms.items()}
        out.append(RelationVector(alphabet, coeffs, ident.name))
    return out


# --- exact linear algebra --------------------------------------------------


def _rref(rows: list) -> tuple:
    """Reduced row echelon form over Fractions; returns (rows, pivot columns)."""
    m = [list(r) for r in rows]
    pivots = []
    r = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(vectors: Sequence[RelationVector], alphabet: Sequence[str] | None = None) -> int:
    if not vectors:
        return 0
    basis = space_basis(alphabet or vectors[0].alphabet)
    rows = [[v.coeffs.get(t, Fraction(0)) for t in basis] for v in vectors]
    return len(_rref(rows)[1])


def annihilator(vectors: Sequence[RelationVector], alphabet: Sequence[str] | None = None) -> list:
    """A basis of {r over the dual alphabet : <v, r> = 0 for all v}."""
    if alphabet is None:
        if not vectors:
            raise ValueError("give the alphabet when there are no vectors")
        alphabet = vectors[0].alphabet
    dual = _dual_alphabet(alphabet)
    dual_basis = space_basis(dual)
    n = len(dual_basis)
    # <v, r> = sum over t of sign(t) v_t r_t*, so the constraint row is v signed
    rows = []
    for v in vectors:
        rows.append([(1 if t.shape == LEFT else -1) * v.coeffs.get(
            QuadTerm(t.shape, DUAL_OF[t.mu], DUAL_OF[t.nu]), Fraction(0)) for t in dual_basis])
    reduced, pivots = _rref(rows) if rows else ([], [])
    free = [c for c in range(n) if c not in pivots]
    out = []
    for f in free:
        vec = [Fraction(0)] * n
        vec[f] = Fraction(1)
        for row, p in zip(reduced, pivots):
            vec[p] = -row[f]
        out.append(RelationVector(dual, dict(zip(dual_basis, vec)), f"ann[{len(out) + 1}]"))
    return out


def dual_parameter(kind: str, q) -> Fraction:
    """The parameter at which the dual of ``kind`` is expected: 1/q for the q-kinds."""
    if kind in ("q_tridendriform", "q_triassociative"):
        q = Fraction(q)
        if q == 0:
            raise ZeroQ("the dual parameter 1/q needs q != 0")
        return 1 / q
    return Fraction(1)


def verify_duality(primal: str, dual: str, q=1, dual_param=None) -> dict:
    """Check that the ``dual`` relations span exactly the annihilator of ``primal``.

    The dual kind is instantiated at ``dual_param`` (by default 1/q for the
    q-kinds).  ``witnesses`` lists primal/dual relation pairs whose pairing
    is nonzero.
    """
    if primal not in KINDS or dual not in KINDS:
        raise ConfigError(f"unknown kinds {primal!r}, {dual!r}")
    expected = dual_parameter(primal, q)  # raises ZeroQ for q = 0 on the q-kinds
    if dual_param is None:
        dual_param = expected
    P = build_relations(primal, q)
    D = build_relations(dual, dual_param)
    alphabet = KINDS[primal][1]
    if _dual_alphabet(alphabet) != KINDS[dual][1]:
        raise AlphabetMismatch(f"{primal} and {dual} do not use dual alphabets")
    ann = annihilator(P, alphabet)
    witnesses = []
    for u in P:
        for v in D:
            val = pairing(u, v)
            if val:
                witnesses.append({"primal": u.label, "dual": v.label, "pairing": str(val)})
    dual_rank = rank(D)
    ann_dim = len(ann)
    # span(D) is inside ann exactly when there are no witnesses; equal dims then force equality
    equal = not witnesses and dual_rank == ann_dim
    return {
        "primal": primal, "dual": dual, "q": str(Fraction(q)), "dual_param": str(Fraction(dual_param)),
        "space_dim": len(space_basis(alphabet)), "primal_rank": rank(P),
        "annihilator_dim": ann_dim, "dual_rank": dual_rank, "equal": equal,
        "witnesses": witnesses,
    }
