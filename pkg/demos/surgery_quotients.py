"""
Finite quotients of 1/p surgeries on the trefoil
================================================

Every 1/p surgery on a knot is a homology sphere, so abelian targets see
nothing. Counting homomorphisms into S3, S4 and A5 does separate some of
them: +1 surgery on the positive trefoil is the Poincare sphere, whose
group maps onto A5.
"""

from linksurgery import BraidWord, closure_presentation
from linksurgery.quotients import (
    abelianization_invariants,
    distinguish_family,
    group_by_name,
    hom_count,
    surgery_quotient,
)

targets = [group_by_name(n) for n in ("S3", "S4", "A5")]
trefoil = closure_presentation(BraidWord(2, (1, 1, 1)))

for p in range(1, 7):
    g = surgery_quotient(trefoil, p)
    counts = [hom_count(g, G).total for G in targets]
    print(f"1/{p}: H1 invariants {abelianization_invariants(g)}  homs {counts}")

part = distinguish_family(
    [surgery_quotient(trefoil, p) for p in range(1, 7)], targets, [f"1/{p}" for p in range(1, 7)]
)
print("blocks:", [[part.labels[i] for i in b] for b in part.blocks])

# the unknot control: every quotient is trivial
unknot = closure_presentation(BraidWord(1))
print([hom_count(surgery_quotient(unknot, p), targets[2]).total for p in range(1, 6)])
