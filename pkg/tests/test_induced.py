import pytest

from dendriform import identities as ids
from dendriform.dend import FreeDendriform
from dendriform.errors import AxiomViolation, CommutativityViolation, ConfigError, WeightNotZero
from dendriform.identities import check_identities
from dendriform.induced import (CONVERSIONS, convert, induce_novikov_dendriform,
                                induce_novikov_tridendriform, induce_post_novikov,
                                induce_pre_novikov)
from dendriform.qshuffle import QuasiShuffleAlgebra, element
from dendriform.scalars import ONE, LinComb, ZERO, Scalar
from dendriform.suites import element_size, tree_elements, word_elements
from dendriform.trees import BinaryNode, Leaf, btree, gen, graft, stree
from dendriform.tridend import FreeTridendriform

B = LinComb.basis
DD0 = FreeDendriform(ZERO)
DT0 = FreeTridendriform(ZERO)
DT01 = FreeTridendriform(ZERO, ONE)
QS0 = QuasiShuffleAlgebra(ZERO)
QS01 = QuasiShuffleAlgebra(ZERO, ONE)
SH0 = QuasiShuffleAlgebra(ZERO, ZERO, shuffle=True)

letters = word_elements(["a", "b"], 0, 1)
X, Y, Z = (B(stree(n)) for n in "xyz")
BX, BY, BZ = (B(btree(n)) for n in "xyz")


def passes(table, lst, els, max_total=None):
    rep = check_identities(table, lst, els, size=element_size if max_total else None,
                           max_total=max_total)
    return rep


def test_novikov_dendriform_examples():
    nd = induce_novikov_dendriform(DD0.op_table())
    assert nd["↘"](BX, BY) == B(BinaryNode(btree("x", 1), gen("y"), Leaf))
    assert nd["↘"](BX, BY) == DD0.succ(B(btree("x", 1)), BY)
    ident = ids.NOVIKOV_DENDRIFORM[0]
    assert not ident.evaluate(nd, [BX, BY, BZ])
    assert not ids.NOVIKOV_ASSOCIATIVE[0].evaluate(nd, [BX, BY, BZ])
    assert nd.d is None


def test_novikov_dendriform_small_set():
    nd = induce_novikov_dendriform(DD0.op_table())
    els = tree_elements("dend", ["x"], 0, 2)
    assert passes(nd, ids.NOVIKOV_DENDRIFORM + ids.NOVIKOV_ASSOCIATIVE, els, 3).passed


def test_novikov_tridendriform_examples():
    ntd = induce_novikov_tridendriform(DT0.op_table(), q_weighted=True)
    assert ntd["∧"](X, Y) == B(graft([Leaf] * 3, [gen("x"), gen("y", 1)]))
    last = ids.NOVIKOV_TRIDENDRIFORM_Q[13]
    assert not last.evaluate(ntd, [X, Y, Z])
    assert not ids.NOVIKOV_TRIDENDRIFORM[13].evaluate(ntd, [X, Y, Z])
    for ident in ids.NOVIKOV_ASSOCIATIVE:
        assert not ident.evaluate(ntd, [X, Y, Z])


def test_displayed_novikov_tridendriform_needs_q_equal_one():
    els = tree_elements("tridend", ["x"], 0, 1)
    at_one = induce_novikov_tridendriform(DT01.op_table())
    assert passes(at_one, ids.NOVIKOV_TRIDENDRIFORM + ids.NOVIKOV_ASSOCIATIVE, els).passed
    symbolic = induce_novikov_tridendriform(DT0.op_table())
    rep = passes(symbolic, ids.NOVIKOV_TRIDENDRIFORM, els)
    assert not rep.passed
    # the residuals vanish at q = 1, i.e. carry a factor q - 1
    for r in rep.failures():
        ident = next(i for i in ids.NOVIKOV_TRIDENDRIFORM if i.name == r.name)
        res = ident.evaluate(symbolic, [X] * ident.arity)
        assert res and not res.substitute(q=1)
    weighted = induce_novikov_tridendriform(DT0.op_table(), q_weighted=True)
    assert passes(weighted, ids.NOVIKOV_TRIDENDRIFORM_Q + ids.NOVIKOV_ASSOCIATIVE, els).passed


def test_pre_novikov_on_shuffle_algebra():
    pn = induce_pre_novikov(SH0.op_table(), letters)
    a, b = letters[0], letters[1]
    assert pn["◁"](a, b) == SH0.prec(a, SH0.d(b))
    assert passes(pn, ids.PRE_NOVIKOV[2:3], letters).passed
    assert passes(pn, ids.PRE_NOVIKOV + ids.NOVIKOV, word_elements(["a"], 0, 2), 4).passed


def test_post_novikov_on_quasi_shuffles():
    post = induce_post_novikov(QS0.op_table(), letters, q_weighted=True)
    a, b = letters
    assert post["⊻"](a, b) == QS0.bullet(a, QS0.d(b))
    assert passes(post, ids.POST_NOVIKOV[8:9], letters).passed
    assert passes(post, ids.NOVIKOV, word_elements(["a", "b"], 0, 2), 4).passed


def test_displayed_post_novikov_entries_six_and_eight_fail_even_at_q_one():
    post = induce_post_novikov(QS01.op_table())
    els = word_elements(["a"], 0, 2)
    rep = passes(post, ids.POST_NOVIKOV, els, 4)
    assert {r.name for r in rep.failures()} == {"post_novikov[6]", "post_novikov[8]"}
    assert passes(post, ids.POST_NOVIKOV_CORRECTED, els, 4).passed
    weighted = induce_post_novikov(QS0.op_table(), q_weighted=True)
    assert passes(weighted, ids.POST_NOVIKOV_CORRECTED_Q, els, 4).passed


def test_weight_must_be_zero():
    with pytest.raises(WeightNotZero):
        induce_novikov_dendriform(FreeDendriform().op_table())
    with pytest.raises(WeightNotZero):
        induce_post_novikov(QuasiShuffleAlgebra().op_table())
    no_d = DD0.op_table()
    no_d.d = None
    with pytest.raises(WeightNotZero):
        induce_novikov_dendriform(no_d)


def test_commutativity_is_spot_checked():
    with pytest.raises(CommutativityViolation) as exc:
        induce_post_novikov(DT0.op_table(), tree_elements("tridend", ["x"], 0, 1))
    assert exc.value.witness
    with pytest.raises(CommutativityViolation):
        induce_pre_novikov(DD0.op_table(), tree_elements("dend", ["x"], 0, 1))


def test_leibniz_spot_check():
    broken = DD0.op_table()
    broken.d = lambda x: 2 * x
    with pytest.raises(AxiomViolation):
        induce_novikov_dendriform(broken, tree_elements("dend", ["x"], 0, 1))


# --- conversions ---------------------------------------------------------------------------


def test_pre_novikov_round_trip():
    pn = induce_pre_novikov(SH0.op_table())
    els = word_elements(["a", "b"], 0, 2)
    nd = convert("pre_novikov_to_novikov_dendriform", pn, letters)
    assert passes(nd, ids.NOVIKOV_DENDRIFORM + ids.COMMUTATIVE_NOVIKOV_DENDRIFORM, els, 4).passed
    back = convert("novikov_dendriform_to_pre_novikov", nd, letters)
    for a in els:
        for b in els:
            for s in ("◁", "▷"):
                assert back[s](a, b) == pn[s](a, b)


def test_post_novikov_conversions():
    post = induce_post_novikov(QS01.op_table())
    els = word_elements(["a"], 0, 2)
    ntd = convert("post_novikov_to_novikov_tridendriform", post, letters)
    assert passes(ntd, ids.NOVIKOV_TRIDENDRIFORM + ids.COMMUTATIVE_NOVIKOV_TRIDENDRIFORM,
                  els, 4).passed
    back = convert("novikov_tridendriform_to_post_novikov", ntd, letters)
    assert all(back[s](a, b) == post[s](a, b) for s in ("◁", "▷", "⊻") for a in els for b in els)
    nov = convert("post_novikov_to_novikov", post, letters)
    assert passes(nov, ids.NOVIKOV, els, 4).passed


def test_novikov_associative_conversions():
    pn = induce_pre_novikov(SH0.op_table())
    els = word_elements(["a", "b"], 0, 2)
    na = convert("novikov_to_novikov_associative", pn, letters)
    assert passes(na, ids.NOVIKOV_ASSOCIATIVE + ids.COMMUTATIVE_NOVIKOV_ASSOCIATIVE,
                  els, 4).passed
    nov = convert("novikov_associative_to_novikov", na, letters)
    assert passes(nov, ids.NOVIKOV, els, 4).passed


def test_conversion_errors():
    with pytest.raises(ConfigError):
        convert("nonsense", DD0.op_table(), [])
    nd = induce_novikov_dendriform(DD0.op_table())
    with pytest.raises(AxiomViolation) as exc:
        convert("novikov_dendriform_to_pre_novikov", nd, tree_elements("dend", ["x"], 0, 1))
    assert exc.value.identity.startswith("commutative_novikov_dendriform")
    assert set(CONVERSIONS) >= {"pre_novikov_to_novikov_dendriform", "post_novikov_to_novikov"}
