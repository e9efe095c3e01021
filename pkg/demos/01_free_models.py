"""A first walk through the free models.

Trees are the basis.  Products of generators give linear combinations of
trees with coefficients in Q[lam, q], and the derivation spreads order
increments over the decorations with a weight lam for every extra one.
"""

from dendriform import FreeDendriform, FreeTridendriform, LinComb
from dendriform.dend import embed
from dendriform.scalars import ZERO
from dendriform.trees import btree, enumerate_schroeder, make_alphabet, stree

DT = FreeTridendriform()
x, y, z = (LinComb.basis(stree(n)) for n in "xyz")

print("x ≺ y  =", DT.prec(x, y))
print("x ≻ y  =", DT.succ(x, y))
print("x • y  =", DT.bullet(x, y))
print("x ⋆ y  =", DT.star(x, y))

# one vertex carrying two decorations gets three derivative terms
print("d(x • y) =", DT.d(DT.bullet(x, y)))

# the associativity of ⋆ is exact, including the q-dependent pieces
lhs = DT.star(DT.star(x, y), z)
rhs = DT.star(x, DT.star(y, z))
print("(x⋆y)⋆z - x⋆(y⋆z) =", lhs - rhs)

print("Schröder trees with 4 leaves over one generator:")
for t in enumerate_schroeder(make_alphabet(["x"]), 4):
    print("   ", t)

# binary trees sit inside Schröder trees once q = 0
DD = FreeDendriform()
bx, by = LinComb.basis(btree("x")), LinComb.basis(btree("y"))
DT0 = FreeTridendriform(q=ZERO)
lifted = DT0.prec(embed(bx), embed(by))
print("embed(x ≺ y) == embed(x) ≺ embed(y):", embed(DD.prec(bx, by)) == lifted)
