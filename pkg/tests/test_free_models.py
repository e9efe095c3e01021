"""Free differential q-tridendriform (Schröder trees) and dendriform (binary trees)."""

import pytest

from dendriform import identities as ids
from dendriform.dend import FreeDendriform, embed
from dendriform.dend import f_bar as dd_f_bar
from dendriform.identities import check_identities
from dendriform.qshuffle import QuasiShuffleAlgebra, element
from dendriform.scalars import LAM, ONE, Q, ZERO, LinComb
from dendriform.suites import DendriformView, element_size, tree_elements
from dendriform.trees import (BinaryNode, Leaf, btree, enumerate_binary, enumerate_schroeder,
                              gen, graft, make_alphabet, stree)
from dendriform.tridend import FreeTridendriform
from dendriform.tridend import f_bar as dt_f_bar

B = LinComb.basis
DT = FreeTridendriform()
DD = FreeDendriform()
X, Y, Z = (B(stree(n)) for n in "xyz")
BX, BY, BZ = (B(btree(n)) for n in "xyz")


def corolla(*decs):
    return graft([Leaf] * (len(decs) + 1), decs)


# --- DT products ---------------------------------------------------------------


def test_dt_products_on_generators():
    assert DT.prec(X, Y) == B(graft([Leaf, stree("y")], [gen("x")]))
    assert DT.bullet(X, Y) == B(corolla(gen("x"), gen("y")))
    assert DT.succ(X, Y) == B(graft([stree("x"), Leaf], [gen("y")]))


def test_dt_star():
    want = DT.prec(X, Y) + DT.succ(X, Y) + Q * B(corolla(gen("x"), gen("y")))
    assert DT.star(X, Y) == want
    assert DT.star(DT.star(X, Y), Z) == DT.star(X, DT.star(Y, Z))
    flat = FreeTridendriform(q=ZERO)
    assert flat.star(X, Y) == flat.prec(X, Y) + flat.succ(X, Y)


def test_dt_never_outputs_the_leaf():
    els = tree_elements("tridend", ["x"], 0, 2)
    for a in els:
        for b in els:
            for op in (DT.prec, DT.succ, DT.bullet, DT.star):
                assert Leaf not in op(a, b)._terms
    with pytest.raises(ValueError):
        DT.prec(Leaf, X)


def test_dt_derivation_examples():
    assert DT.d(B(stree("x", 4))) == B(stree("x", 5))
    t = graft([stree("x1", 1), stree("x3", 3)], [gen("x2", 2)])
    got = DT.d(B(t))
    assert len(got) == 7
    assert {str(c) for _, c in got.items()} == {"1", "lam", "lam^2"}
    assert sum(1 for _, c in got.items() if c == LAM) == 3
    top = graft([stree("x1", 2), stree("x3", 4)], [gen("x2", 3)])
    assert got.coeff(top) == LAM ** 2
    c = corolla(gen("x"), gen("y"))
    assert DT.d(B(c)) == (B(corolla(gen("x", 1), gen("y"))) + B(corolla(gen("x"), gen("y", 1)))
                          + LAM * B(corolla(gen("x", 1), gen("y", 1))))
    # oracle: the Leibniz identity for the bullet product
    assert DT.d(DT.bullet(X, Y)) == (DT.bullet(DT.d(X), Y) + DT.bullet(X, DT.d(Y))
                                     + LAM * DT.bullet(DT.d(X), DT.d(Y)))


def test_dt_axioms_and_leibniz_small():
    els = tree_elements("tridend", ["x"], 0, 2)
    rep = check_identities(DT.op_table(), ids.Q_TRIDENDRIFORM + ids.STAR_ASSOCIATIVE, els,
                           size=element_size, max_total=4)
    assert rep.passed, rep.failures()
    rep = check_identities(DT.op_table(), ids.LEIBNIZ_TRIDENDRIFORM,
                           tree_elements("tridend", ["x", "y"], 1, 2), size=element_size,
                           max_total=3)
    assert rep.passed


def test_dt_induced_dendriform():
    els = tree_elements("tridend", ["x"], 0, 3)
    rep = check_identities(DT.dendriform_table(), ids.DENDRIFORM + ids.LEIBNIZ_DENDRIFORM, els,
                           size=element_size, max_total=4)
    assert rep.passed


# --- f_bar on DT -----------------------------------------------------------------------


QS = QuasiShuffleAlgebra()
IMAGES = {"x": element("x") + element("x", "x^(1)"), "y": element("y")}


def test_dt_f_bar_examples():
    f = IMAGES.__getitem__
    assert dt_f_bar(f, QS, B(stree("x", 2))) == QS.d(QS.d(IMAGES["x"]))
    assert dt_f_bar(f, QS, B(graft([Leaf, stree("y")], [gen("x")]))) == QS.prec(IMAGES["x"],
                                                                                 IMAGES["y"])


def test_dt_f_bar_into_itself_is_identity():
    f = lambda name: B(stree(name))
    alpha = make_alphabet(["x", "y"], 1)
    for n in (2, 3, 4):
        for t in enumerate_schroeder(alpha, n):
            assert dt_f_bar(f, DT, B(t)) == B(t)


def test_dt_f_bar_is_a_morphism_into_quasi_shuffles():
    f = IMAGES.__getitem__
    cache = {}
    fb = lambda x: dt_f_bar(f, QS, x, cache)
    els = tree_elements("tridend", ["x", "y"], 0, 2)
    for a in els:
        for b in els:
            if element_size(a) + element_size(b) > 3:
                continue
            for src, tgt in ((DT.prec, QS.prec), (DT.succ, QS.succ), (DT.bullet, QS.bullet)):
                assert fb(src(a, b)) == tgt(fb(a), fb(b))
    for a in els:
        assert fb(DT.d(a)) == QS.d(fb(a))


# --- DD ----------------------------------------------------------------------------


def test_dd_products_on_generators():
    assert DD.prec(BX, BY) == B(BinaryNode(Leaf, gen("x"), btree("y")))
    assert DD.succ(BX, BY) == B(BinaryNode(btree("x"), gen("y"), Leaf))
    assert DD.prec(DD.prec(BX, BY), BZ) == DD.prec(BX, DD.prec(BY, BZ) + DD.succ(BY, BZ))


def test_dd_derivation_examples():
    assert DD.d(BX) == B(btree("x", 1))
    t = BinaryNode(btree("y"), gen("x"), Leaf)
    want = (B(BinaryNode(btree("y", 1), gen("x"), Leaf)) + B(BinaryNode(btree("y"), gen("x", 1), Leaf))
            + LAM * B(BinaryNode(btree("y", 1), gen("x", 1), Leaf)))
    assert DD.d(B(t)) == want
    assert DD.d(DD.succ(BY, BX)) == (DD.succ(DD.d(BY), BX) + DD.succ(BY, DD.d(BX))
                                     + LAM * DD.succ(DD.d(BY), DD.d(BX)))
    flat = FreeDendriform(ZERO)
    assert flat.d(B(t)) == want - LAM * B(BinaryNode(btree("y", 1), gen("x", 1), Leaf))


def test_dd_axioms_small():
    els = tree_elements("dend", ["x"], 0, 3)
    rep = check_identities(DD.op_table(), ids.DENDRIFORM + ids.STAR_ASSOCIATIVE, els,
                           size=element_size, max_total=4)
    assert rep.passed
    rep = check_identities(DD.op_table(), ids.LEIBNIZ_DENDRIFORM,
                           tree_elements("dend", ["x", "y"], 1, 2), size=element_size, max_total=3)
    assert rep.passed


def test_dd_f_bar_examples():
    view = DendriformView(QS)
    f = IMAGES.__getitem__
    assert dd_f_bar(f, view, B(btree("x", 3))) == QS.d(QS.d(QS.d(IMAGES["x"])))
    assert (dd_f_bar(f, view, B(BinaryNode(Leaf, gen("x"), btree("y"))))
            == view.prec(IMAGES["x"], IMAGES["y"]))
    ident = lambda name: B(btree(name))
    for n in (2, 3, 4):
        for t in enumerate_binary(make_alphabet(["x", "y"], 1), n):
            assert dd_f_bar(ident, DD, B(t)) == B(t)


def test_dd_embeds_into_dt_at_q_zero():
    dt0 = FreeTridendriform(q=ZERO)
    els = tree_elements("dend", ["x", "y"], 0, 3)
    for a in els:
        for b in els:
            if element_size(a) + element_size(b) > 3:
                continue
            assert embed(DD.prec(a, b)) == dt0.prec(embed(a), embed(b))
            assert embed(DD.succ(a, b)) == dt0.succ(embed(a), embed(b))
            assert embed(DD.d(a)) == dt0.d(embed(a))
