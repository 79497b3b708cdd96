"""
Curves in the necklace from iterated Borromean braids
=====================================================

The closure of (s1 s2^-1)^p together with its braid axis is a 4-component
link. Reading the axis as H1 and the other closure components as H2, H3
gives a Hopf link plus a parallel copy, and the remaining component is the
curve gamma_p.
"""

from linksurgery import borromean_family_member, classes_equal, torus_class
from linksurgery.alexander import alexander_from_braid, nonzero_term_count

base = torus_class(borromean_family_member(1).gamma_linking)
for p in range(1, 5):
    member = borromean_family_member(p)
    cls = torus_class(member.gamma_linking)
    print(f"p={p}  host lk={member.host_linking}  class={cls.coefficients}  same as p=1: {classes_equal(cls, base)}")

# the homology class is constant but the links are not
for p in range(1, 4):
    delta = alexander_from_braid(borromean_family_member(p).braid).poly
    print(f"p={p}  Delta has {nonzero_term_count(delta)} terms")
