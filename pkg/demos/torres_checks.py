"""
Torres specialization on braid models
=====================================

Setting one variable of a link polynomial to 1 recovers the sublink
polynomial times a linking-number factor. Here K is the trefoil and
gamma_p = T(p, p+1) is clasped to it once.
"""

from linksurgery import BraidWord, clasp, torus_braid, torus_knot_alexander
from linksurgery.alexander import alexander_from_braid, torres_specialize
from linksurgery.laurent import equal_up_to_units
from linksurgery.swcount import beta_sweep

trefoil = BraidWord(2, (1, 1, 1))
for p in (2, 3):
    delta = alexander_from_braid(clasp(torus_braid(p, p + 1), trefoil)).poly
    reduced = torres_specialize(delta, 1)
    print(f"p={p}  Delta(t_gamma, 1) = {reduced.to_text()}")
    print("      matches T(p,p+1):", equal_up_to_units(reduced, torus_knot_alexander(p, p + 1)))

# lower bounds for the two families
for family in ("cable", "trefoil-fiber"):
    table = beta_sweep(family, range(1, 9))
    print(family, table.lower_bounds())
