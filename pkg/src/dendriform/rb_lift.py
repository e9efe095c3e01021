"""Dendriform and q-tridendriform structures from a Rota-Baxter operator.

Given a differential algebra (A, ·, d) of weight λ and an operator P with

    P(a)P(b) = P(P(a)b + aP(b) + q ab)        and        dP = Pd,

the lifts below produce differential (tri)dendriform tables over A.  Both
hypotheses are checked on a finite test set before anything is built.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

from .diffalg import DiffPolyAlgebra
from .errors import CommutationViolation, RBLawViolation
from .identities import OpTable
from .scalars import LAM, ZERO, LinComb, Scalar


def default_test_set(names=("y", "z"), max_order: int = 1, max_degree: int = 2) -> list:
    """Monomials of degree 1..max_degree as polynomial elements, in basis order."""
    return [LinComb.basis(m) for m in
            DiffPolyAlgebra().monomials(names, max_order, max_degree, min_degree=1)]


@dataclass
class RBDiffAlgebra:
    """A differential algebra carrying a Rota-Baxter operator ``P`` of weight ``q``."""

    mul: Callable
    d: Callable
    P: Callable
    q: Scalar
    lam: Scalar = LAM
    test_elements: Sequence = field(default_factory=default_test_set)
    name: str = "A"

    def __post_init__(self):
        self.q = Scalar.coerce(self.q)
        self.lam = Scalar.coerce(self.lam)
        self.test_elements = list(self.test_elements)
        self.verify()

    def verify(self):
        """Raise on the first test pair violating the RB law, then on dP != Pd."""
        mul, P, q = self.mul, self.P, self.q
        for a in self.test_elements:
            Pa = P(a)
            for b in self.test_elements:
                Pb = P(b)
                residual = mul(Pa, Pb) - P(mul(Pa, b) + mul(a, Pb) + q * mul(a, b))
                if residual:
                    raise RBLawViolation((str(a), str(b)), str(residual))
        for a in self.test_elements:
            residual = self.d(P(a)) - P(self.d(a))
            if residual:
                raise CommutationViolation((str(a),), str(residual))


def diffpoly_scalar_rb(c, q, lam=LAM, test_elements: Sequence | None = None) -> RBDiffAlgebra:
    """(DiffPoly, d0) with P = c·id; c = -q gives weight q, c = 0 any weight."""
    alg = DiffPolyAlgebra(Scalar.coerce(lam))
    c = Scalar.coerce(c)
    kwargs = {} if test_elements is None else {"test_elements": test_elements}
    return RBDiffAlgebra(alg.mul, alg.d, lambda a: c * a, q, alg.lam,
                         name=f"DiffPoly[P={c}]", **kwargs)


def _scalars(A: RBDiffAlgebra) -> dict:
    return {"λ": A.lam, "q": A.q}


def lift_dendriform_weight0(A: RBDiffAlgebra) -> OpTable:
    """a ≺ b = aP(b), a ≻ b = P(a)b; needs a weight-0 operator."""
    if A.q != ZERO:
        raise ValueError(f"this lift needs a weight-0 Rota-Baxter operator, got q = {A.q}")
    mul, P = A.mul, A.P
    ops = {"≺": lambda a, b: mul(a, P(b)), "≻": lambda a, b: mul(P(a), b)}
    return OpTable(ops, A.d, _scalars(A), f"dend({A.name})")


def lift_tridendriform(A: RBDiffAlgebra) -> OpTable:
    """a ≺ b = aP(b), a ≻ b = P(a)b and • the product of A."""
    mul, P = A.mul, A.P
    ops = {"≺": lambda a, b: mul(a, P(b)), "≻": lambda a, b: mul(P(a), b), "•": mul}
    ops["⋆"] = lambda a, b: ops["≺"](a, b) + ops["≻"](a, b) + A.q * mul(a, b)
    return OpTable(ops, A.d, _scalars(A), f"trid({A.name})")


def lift_dendriform_weightq(A: RBDiffAlgebra, variant: str = "left") -> OpTable:
    """The weight-q dendriform lift; the q·ab term sits on ≺ (left) or ≻ (right)."""
    mul, P, q = A.mul, A.P, A.q
    if variant == "left":
        ops = {"≺": lambda a, b: mul(a, P(b)) + q * mul(a, b), "≻": lambda a, b: mul(P(a), b)}
    elif variant == "right":
        ops = {"≺": lambda a, b: mul(a, P(b)), "≻": lambda a, b: mul(P(a), b) + q * mul(a, b)}
    else:
        raise ValueError(f"variant must be 'left' or 'right', got {variant!r}")
    return OpTable(ops, A.d, _scalars(A), f"dend_{variant}({A.name})")
