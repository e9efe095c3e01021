"""The commutative model and the map out of the free q-tridendriform algebra.

Words are tensors of differential monomials.  Choosing where each
generator goes fixes a unique structure-preserving map from the free model,
and the script checks it against the operations on a few trees.
"""

from dendriform import FreeTridendriform, LinComb, QuasiShuffleAlgebra
from dendriform.qshuffle import element
from dendriform.suites import universal_generator_images
from dendriform.trees import stree
from dendriform.tridend import f_bar

QS = QuasiShuffleAlgebra()
a, b = element("a"), element("b")
print("a ∗ b =", QS.star(a, b))
print("a ≺ b =", QS.prec(a, b), "   b ≻ a =", QS.succ(b, a))
print("d(a ⊗ b) =", QS.d(element("a", "b")))

DT = FreeTridendriform()
images = universal_generator_images(QS, ["x"])
print("f(x) =", images["x"])


def fb(t):
    return f_bar(images.__getitem__, QS, t)


x = LinComb.basis(stree("x"))
for name, src, tgt in (("≺", DT.prec, QS.prec), ("≻", DT.succ, QS.succ),
                       ("•", DT.bullet, QS.bullet)):
    ok = fb(src(x, x)) == tgt(fb(x), fb(x))
    print(f"f̄(x {name} x) == f̄(x) {name} f̄(x):", ok)
print("f̄(d x) == d f̄(x):", fb(DT.d(x)) == QS.d(fb(x)))
