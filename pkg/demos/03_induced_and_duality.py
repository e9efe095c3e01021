"""Weight-zero derivations, the structures they induce, and Koszul duals.

With lam = 0 the derivation twists the dendriform operations into Novikov
type ones.  The identity checker reports the first witness when a listed
identity does not hold, which is how the two mis-stated post-Novikov
entries show up.  The last part computes the quadratic duals.
"""

from dendriform import identities as ids
from dendriform.identities import check_identities
from dendriform.induced import induce_post_novikov
from dendriform.koszul import verify_duality
from dendriform.qshuffle import QuasiShuffleAlgebra
from dendriform.scalars import ONE, ZERO
from dendriform.suites import element_size, word_elements

post = induce_post_novikov(QuasiShuffleAlgebra(ZERO, ONE).op_table())
words = word_elements(["a"], 0, 2)
for lst in (ids.POST_NOVIKOV, ids.POST_NOVIKOV_CORRECTED):
    report = check_identities(post, lst, words, size=element_size, max_total=4)
    for r in report.results:
        if not r.passed:
            print(f"{r.name}: fails on {r.witness}")
    print(f"{lst.name}: {'all pass' if report.passed else 'has failures'}")

for primal, dual, q in (("dendriform", "diassociative", 1), ("q_tridendriform", "q_triassociative", 2)):
    rep = verify_duality(primal, dual, q)
    print(f"{primal} vs {dual} at q={rep['q']} (dual at {rep['dual_param']}): "
          f"space {rep['space_dim']}, rank {rep['primal_rank']}, "
          f"annihilator {rep['annihilator_dim']}, equal={rep['equal']}")
