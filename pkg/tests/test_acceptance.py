"""One test per acceptance criterion; a PASS/FAIL line per test is printed at the end of the run."""
import random
import time

from linksurgery.alexander import (
    alexander_burau,
    alexander_from_braid,
    nonzero_term_count,
    torres_specialize,
    torus_knot_alexander,
)
from linksurgery.braid import BraidWord, borromean_block_braid, cable_family_descriptor, cable_with_core, clasp, torus_braid
from linksurgery.fox import closure_presentation, fox_abelian, word_abelianization
from linksurgery.laurent import LaurentPoly, equal_up_to_units, substitute
from linksurgery.quotients import abelianization_invariants, group_by_name, hom_count, surgery_quotient
from linksurgery.surgery import (
    borromean_family_member,
    classes_equal,
    hopf_descriptor,
    knot_descriptor,
    necklace_descriptor,
    slope,
    torus_class,
)
from linksurgery.swcount import beta_sweep, basic_class_count, sw_polynomial, torus_family_term_counts

t = LaurentPoly.var(1, 0)
TREFOIL_BRAID = BraidWord(2, (1, 1, 1))


def test_criterion_1_torus_closed_form():
    start = time.perf_counter()
    cases = {(2, 3): t ** 2 - t + 1, (3, 4): t ** 6 - t ** 5 + t ** 3 - t + 1}
    for (p, q), expected in cases.items():
        closed = torus_knot_alexander(p, q)
        b = torus_braid(p, q)
        assert equal_up_to_units(closed, expected)
        assert equal_up_to_units(alexander_from_braid(b).poly, closed)
        assert equal_up_to_units(alexander_burau(b), closed)
    assert time.perf_counter() - start < 1


def test_criterion_2_torus_growth():
    start = time.perf_counter()
    counts = torus_family_term_counts(range(1, 13))
    assert all(a < b for a, b in zip(counts, counts[1:]))
    assert time.perf_counter() - start < 5


def _family_polynomials():
    polys = [(hopf_descriptor(), alexander_from_braid(cable_with_core(TREFOIL_BRAID, p)).poly) for p in (1, 2, 3)]
    polys += [(hopf_descriptor(), alexander_from_braid(clasp(torus_braid(p, p + 1), TREFOIL_BRAID)).poly) for p in (2, 3)]
    polys += [(necklace_descriptor(), alexander_from_braid(borromean_block_braid(p)).poly) for p in (1, 2, 3)]
    return polys


def test_criterion_3_sw_product_formula():
    for desc, delta in _family_polynomials():
        n = delta.nvars
        sw = sw_polynomial(desc, delta)
        assert sw.poly == substitute(delta, [LaurentPoly.var(n, i, 2) for i in range(n)])
        assert basic_class_count(sw) == nonzero_term_count(delta)


def test_criterion_4_torres_specialization():
    for p in (2, 3):
        delta = alexander_from_braid(clasp(torus_braid(p, p + 1), TREFOIL_BRAID)).poly
        assert equal_up_to_units(torres_specialize(delta, 1), torus_knot_alexander(p, p + 1))
    table = beta_sweep("trefoil-fiber", range(1, 13), three_component=True)
    assert table.lower_bounds() == [2 * c for c in torus_family_term_counts(range(1, 13))]


def test_criterion_5_slopes():
    s = slope(knot_descriptor(), 0)
    assert (s.sigma, s.divisibility) == ((0, 1), 1)
    s = slope(necklace_descriptor((1, 0, 0)), 1)
    assert (s.mu_coeff, s.lambda_coeff, s.divisibility) == (-1, 0, 1)
    s = slope(hopf_descriptor((2, 0)), 1)
    assert (s.mu_coeff, s.lambda_coeff, s.divisibility, s.sigma) == (-2, 0, 2, (-1, 0))


def test_criterion_6_torus_classes():
    h1 = torus_class((1, 0, 0), 3)
    for p in range(1, 7):
        assert classes_equal(torus_class(borromean_family_member(p).gamma_linking, 3), h1)
    for p in range(1, 7):
        member = cable_family_descriptor(p, "trefoil-fiber")
        assert torus_class([member.linking["K"]], 1).is_nullhomologous()


def test_criterion_7_homology_spheres():
    start = time.perf_counter()
    trefoil = closure_presentation(TREFOIL_BRAID)
    assert abelianization_invariants(trefoil) == [0]
    assert abelianization_invariants(closure_presentation(torus_braid(3, 4))) == [0]
    for p in range(1, 7):
        assert abelianization_invariants(surgery_quotient(trefoil, p)) == []
    assert time.perf_counter() - start < 1


def test_criterion_8_surgery_controls():
    start = time.perf_counter()
    budget = 60 ** 2
    targets = [group_by_name(n) for n in ("S3", "S4", "A5")]
    unknot = closure_presentation(BraidWord(1))
    for p in range(1, 6):
        q = surgery_quotient(unknot, p)
        assert [hom_count(q, G, budget).total for G in targets] == [1, 1, 1]
    trefoil = closure_presentation(TREFOIL_BRAID)
    assert hom_count(trefoil, targets[0], budget).total == 12
    assert hom_count(surgery_quotient(trefoil, 1), targets[2], budget).total == 121
    assert time.perf_counter() - start < 30


def test_criterion_9_fox_fundamental_identity():
    rng = random.Random(20240611)
    for _ in range(1000):
        gens = rng.randint(1, 5)
        ncomp = rng.randint(1, gens)
        coloring = [rng.randrange(ncomp) for _ in range(gens)]
        word = [rng.choice((1, -1)) * rng.randint(1, gens) for _ in range(rng.randint(0, 16))]
        lhs = LaurentPoly.zero(ncomp)
        for j in range(1, gens + 1):
            lhs = lhs + fox_abelian(word, j, coloring, ncomp) * (LaurentPoly.var(ncomp, coloring[j - 1]) - 1)
        assert lhs == word_abelianization(word, coloring, ncomp) - 1
