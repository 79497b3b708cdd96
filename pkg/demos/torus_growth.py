"""
Term counts of torus-knot Alexander polynomials
================================================

The Alexander polynomial of T(p, p+1) gains two terms with every step in p.
Squaring the variables (as the SW product formula does) never merges terms,
so the count is a lower bound on basic classes for the whole family.
"""

from linksurgery import nonzero_term_count, torus_braid, torus_knot_alexander
from linksurgery.alexander import alexander_from_braid
from linksurgery.laurent import equal_up_to_units

for p in range(1, 11):
    delta = torus_knot_alexander(p, p + 1)
    print(f"p={p:<2} {nonzero_term_count(delta):>3} terms   {delta.to_text()}")

# the closed form against the braid pipeline, for a few small cases
for p in range(2, 5):
    from_braid = alexander_from_braid(torus_braid(p, p + 1)).poly
    print(p, equal_up_to_units(from_braid, torus_knot_alexander(p, p + 1)))
