"""Exact computations in free differential (tri)dendriform algebras.

The main entry points:

* :class:`FreeTridendriform` on decorated Schröder trees,
* :class:`FreeDendriform` on decorated binary trees,
* :class:`QuasiShuffleAlgebra`, the commutative model on tensor words,
* :func:`check_identities` with the axiom library in :mod:`dendriform.identities`.
"""

from .dend import FreeDendriform
from .diffalg import DiffMonomial, DiffPolyAlgebra, DiffVar, parse_monomial
from .identities import LIBRARY, OpTable, check_identities
from .qshuffle import QuasiShuffleAlgebra, TensorWord, psi_bar
from .scalars import LAM, ONE, Q, ZERO, LinComb, Scalar, parse_scalar
from .trees import Leaf, parse_tree, serialize, stree
from .tridend import FreeTridendriform

__version__ = "0.1.0"

__all__ = [
    "FreeDendriform", "FreeTridendriform", "QuasiShuffleAlgebra", "TensorWord", "psi_bar",
    "DiffMonomial", "DiffPolyAlgebra", "DiffVar", "parse_monomial", "LIBRARY", "OpTable",
    "check_identities", "LAM", "ONE", "Q", "ZERO", "LinComb", "Scalar", "parse_scalar",
    "Leaf", "parse_tree", "serialize", "stree",
]
