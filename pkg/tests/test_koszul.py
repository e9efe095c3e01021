from fractions import Fraction

import pytest

from dendriform.errors import AlphabetMismatch, ConfigError, ZeroQ
from dendriform.koszul import (DUAL_OF, DUAL_OPS, KINDS, LEFT, PRIMAL_OPS, RIGHT, QuadTerm,
                               RelationVector, annihilator, build_relations, dual_parameter,
                               pairing, rank, space_basis, verify_duality)

from oracles import sympy_rank_and_nullity

QS = [Fraction(1), Fraction(2), Fraction(-1, 2)]


def rows(vectors, alphabet):
    basis = space_basis(alphabet)
    return [[v.coeffs.get(t, 0) for t in basis] for v in vectors]


def signed_rows(vectors, alphabet):
    """Constraint rows for the annihilator, written out directly."""
    out = []
    for v in vectors:
        out.append([(1 if t.shape == LEFT else -1) * v.coeffs.get(
            QuadTerm(t.shape, DUAL_OF[t.mu], DUAL_OF[t.nu]), 0)
            for t in space_basis(tuple(DUAL_OF[o] for o in alphabet))])
    return out


def test_pairing_examples():
    u = RelationVector(("≺", "≻"), {QuadTerm(LEFT, "≺", "≺"): 1})
    v = RelationVector(("⊣", "⊢"), {QuadTerm(LEFT, "⊣", "⊣"): 1})
    assert pairing(u, v) == 1
    r1 = build_relations("q_tridendriform", 2)[0]
    assoc = RelationVector(DUAL_OPS, {QuadTerm(LEFT, "⊣", "⊣"): 1, QuadTerm(RIGHT, "⊣", "⊣"): -1})
    assert pairing(r1, assoc) == 0
    assert pairing(u, RelationVector(("⊣", "⊢"), {})) == 0
    with pytest.raises(AlphabetMismatch):
        pairing(u, RelationVector(DUAL_OPS, {}))


def test_pairing_is_perfect():
    for alphabet in (("≺", "≻"), PRIMAL_OPS):
        dual = tuple(DUAL_OF[o] for o in alphabet)
        basis, dbasis = space_basis(alphabet), space_basis(dual)
        for i, s in enumerate(basis):
            for j, t in enumerate(dbasis):
                val = pairing(RelationVector(alphabet, {s: 1}), RelationVector(dual, {t: 1}))
                if i == j:
                    assert val == (1 if s.shape == LEFT else -1)
                else:
                    assert val == 0


def test_relation_counts():
    assert len(build_relations("dendriform")) == 3
    assert len(space_basis(KINDS["dendriform"][1])) == 8
    assert len(build_relations("q_tridendriform", 1)) == 7
    assert len(space_basis(PRIMAL_OPS)) == 18
    tria = build_relations("q_triassociative", 3)
    assert len(tria) == 11
    want = {QuadTerm(LEFT, "⊣", "⊣"): 1, QuadTerm(RIGHT, "⊣", "⊥"): -3}
    assert any(v.coeffs == want for v in tria)


@pytest.mark.parametrize("kind,q,expected", [
    ("dendriform", 1, 3), ("diassociative", 1, 5),
    *[("q_tridendriform", q, 7) for q in QS], *[("q_triassociative", q, 11) for q in QS],
    ("q_triassociative", Fraction(1, 3), 11),
])
def test_ranks_match_sympy(kind, q, expected):
    vecs = build_relations(kind, q)
    alphabet = KINDS[kind][1]
    r, _ = sympy_rank_and_nullity(rows(vecs, alphabet), len(space_basis(alphabet)))
    assert r == expected == rank(vecs)


@pytest.mark.parametrize("kind,q", [("dendriform", 1)] + [("q_tridendriform", q) for q in QS])
def test_annihilator_dimension_matches_sympy(kind, q):
    vecs = build_relations(kind, q)
    alphabet = KINDS[kind][1]
    ann = annihilator(vecs)
    _, nullity = sympy_rank_and_nullity(signed_rows(vecs, alphabet), len(space_basis(alphabet)))
    assert len(ann) == nullity
    for v in vecs:
        for r in ann:
            assert pairing(v, r) == 0


def test_annihilator_of_nothing_is_everything():
    assert len(annihilator([], ("≺", "≻"))) == 8
    with pytest.raises(ValueError):
        annihilator([])


def test_verify_duality_dendriform():
    rep = verify_duality("dendriform", "diassociative")
    assert (rep["space_dim"], rep["primal_rank"], rep["annihilator_dim"]) == (8, 3, 5)
    assert rep["equal"] and rep["dual_rank"] == 5 and rep["witnesses"] == []


@pytest.mark.parametrize("q", QS)
def test_verify_duality_tridendriform(q):
    rep = verify_duality("q_tridendriform", "q_triassociative", q)
    assert (rep["space_dim"], rep["primal_rank"], rep["annihilator_dim"]) == (18, 7, 11)
    assert rep["equal"]
    assert Fraction(rep["dual_param"]) == 1 / q


def test_wrong_parameter_fails_with_witness():
    rep = verify_duality("q_tridendriform", "q_triassociative", 2, dual_param=2)
    assert not rep["equal"]
    assert rep["witnesses"] and {"primal", "dual", "pairing"} <= set(rep["witnesses"][0])


def test_errors():
    with pytest.raises(ZeroQ):
        verify_duality("q_tridendriform", "q_triassociative", 0)
    with pytest.raises(ZeroQ):
        dual_parameter("q_tridendriform", 0)
    with pytest.raises(ConfigError):
        build_relations("lie")
    with pytest.raises(AlphabetMismatch):
        RelationVector(("≺",), {QuadTerm(LEFT, "≺", "•"): 1})
    with pytest.raises(AlphabetMismatch):
        verify_duality("dendriform", "q_triassociative")
