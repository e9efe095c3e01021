import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dendriform.errors import MixedOperatorAmbiguity, ParseError, UnboundSymbol
from dendriform.expr import Atom, Bin, D, Scaled, Sum, eval_expr, free_symbols, parse_expr, print_expr
from dendriform.qshuffle import QuasiShuffleAlgebra, element
from dendriform.scalars import LAM, Q, LinComb
from dendriform.trees import stree
from dendriform.tridend import FreeTridendriform

from oracles import random_expr


def test_parse_examples():
    assert parse_expr("x <: y") == Bin("<:", Atom("x"), Atom("y"))
    assert parse_expr("d(x'' :> y)") == D(Bin(":>", Atom("x", 2), Atom("y")))
    assert parse_expr("x^(3)") == Atom("x", 3)
    with pytest.raises(MixedOperatorAmbiguity):
        parse_expr("x <: y :> z")


def test_precedence_and_associativity():
    assert parse_expr("x . y . z") == Bin(".", Bin(".", Atom("x"), Atom("y")), Atom("z"))
    e = parse_expr("[lam] x <: y - z")
    assert e == Sum(((1, Bin("<:", Scaled(LAM, Atom("x")), Atom("y"))), (-1, Atom("z"))))
    assert parse_expr("(x <: y) :> z") == Bin(":>", Bin("<:", Atom("x"), Atom("y")), Atom("z"))


def test_error_offsets_are_bytes():
    with pytest.raises(MixedOperatorAmbiguity) as exc:
        parse_expr("x <: y :> z")
    assert exc.value.position == 7
    with pytest.raises(ParseError) as exc:
        parse_expr("[q] ≺ x")
    assert exc.value.position == 4
    with pytest.raises(ParseError) as exc:
        parse_expr("[q] x ⋆ y")
    assert exc.value.position == 6
    with pytest.raises(ParseError) as exc:
        parse_expr("x <: ")
    assert "name" in exc.value.expected


@pytest.mark.parametrize("bad", ["", "x +", "d(x", "[lam x", "[] x", "x^(a)", "(x", "x y"])
def test_malformed(bad):
    with pytest.raises(ParseError):
        parse_expr(bad)


def test_printer_is_canonical():
    assert print_expr(parse_expr("x''  <:y")) == "x^(2) <: y"
    assert print_expr(parse_expr("[2]  (x+y)")) == "[2] (x + y)"
    assert print_expr(parse_expr("x <: (y <: z)")) == "x <: (y <: z)"


def test_random_round_trip_sample():
    rng = random.Random(7)
    for _ in range(500):
        e = random_expr(rng)
        assert parse_expr(print_expr(e)) == e


@given(st.integers(0, 2 ** 32))
def test_hypothesis_round_trip(seed):
    e = random_expr(random.Random(seed), 5)
    text = print_expr(e)
    assert parse_expr(text) == e
    assert print_expr(parse_expr(text)) == text


def test_eval_examples():
    DT = FreeTridendriform()
    b = {"x": LinComb.basis(stree("x")), "y": LinComb.basis(stree("y"))}
    assert eval_expr(parse_expr("x . y"), DT, b) == DT.bullet(b["x"], b["y"])
    assert len(eval_expr(parse_expr("d(x . y)"), DT, b)) == 3
    assert eval_expr(parse_expr("x' - d(x)"), DT, b) == LinComb.zero()
    assert eval_expr(parse_expr("[q] x"), DT, b) == Q * b["x"]
    QS = QuasiShuffleAlgebra()
    w = {"x": element("a"), "y": element("b")}
    got = eval_expr(parse_expr("x * y"), QS, w)
    assert got == element("a", "b") + element("b", "a") + Q * element("a*b")


def test_eval_errors():
    with pytest.raises(UnboundSymbol):
        eval_expr(parse_expr("x <: w"), FreeTridendriform(), {"x": LinComb.basis(stree("x"))})
    from dendriform.dend import FreeDendriform
    from dendriform.trees import btree
    with pytest.raises(ValueError):
        eval_expr(parse_expr("x . x"), FreeDendriform(), {"x": LinComb.basis(btree("x"))})


def test_free_symbols():
    assert free_symbols(parse_expr("d(x <: y) + [q] z'")) == {"x", "y", "z"}
