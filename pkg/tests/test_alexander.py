from math import gcd

import pytest
from hypothesis import given, strategies as st

from linksurgery.alexander import (
    alexander_burau,
    alexander_from_braid,
    alexander_with_axis,
    cable_alexander,
    nonzero_term_count,
    reduced_burau,
    torres_prediction,
    torres_specialize,
    torus_knot_alexander,
)
from linksurgery.braid import (
    BraidWord,
    add_meridian,
    borromean_block_braid,
    cable_with_core,
    clasp,
    closure_info,
    sublink,
    torus_braid,
)
from linksurgery.laurent import LaurentPoly, equal_up_to_units, substitute

t = LaurentPoly.var(1, 0)
TREFOIL = t ** 2 - t + 1
T34 = t ** 6 - t ** 5 + t ** 3 - t + 1
TREFOIL_BRAID = BraidWord(2, (1, 1, 1))


def test_trefoil_from_braid():
    res = alexander_from_braid(torus_braid(2, 3))
    assert res.route == "minor-division"
    assert res.num_components == 1
    assert equal_up_to_units(res.poly, TREFOIL)
    assert res.poly == t ** -1 - 1 + t


def test_hopf_link_is_one():
    assert equal_up_to_units(alexander_from_braid(BraidWord(2, (1, 1))).poly, LaurentPoly.constant(2, 1))


def test_unknot_is_one():
    assert alexander_from_braid(BraidWord(1)).poly == LaurentPoly.constant(1, 1)


def test_burau_examples():
    assert equal_up_to_units(alexander_burau(torus_braid(2, 3)), TREFOIL)
    assert equal_up_to_units(alexander_burau(torus_braid(3, 4)), T34)
    assert alexander_burau(BraidWord(1)) == 1


def test_burau_rejects_links():
    with pytest.raises(ValueError):
        alexander_burau(BraidWord(2, (1, 1)))


def test_reduced_burau_of_sigma1_on_two_strands():
    assert reduced_burau(BraidWord(2, (1,))) == [[-t]]
    assert reduced_burau(BraidWord(2, (-1,))) == [[-(t ** -1)]]


def test_torus_closed_form_examples():
    assert equal_up_to_units(torus_knot_alexander(2, 3), TREFOIL)
    assert equal_up_to_units(torus_knot_alexander(3, 4), T34)
    assert nonzero_term_count(torus_knot_alexander(3, 4)) == 5
    assert torus_knot_alexander(1, 7) == 1
    with pytest.raises(ValueError):
        torus_knot_alexander(2, 4)


COPRIME = [(p, q) for p in range(1, 7) for q in range(1, 7) if gcd(p, q) == 1]


@pytest.mark.parametrize("p,q", COPRIME)
def test_routes_agree_on_torus_knots(p, q):
    b = torus_braid(p, q)
    minor = alexander_from_braid(b).poly
    assert equal_up_to_units(minor, alexander_burau(b))
    assert equal_up_to_units(minor, torus_knot_alexander(p, q))
    assert minor.invert_variables() == minor
    assert abs(minor.evaluate_at_one()) == 1


three_strand_knots = st.lists(st.sampled_from([1, -1, 2, -2]), max_size=12).map(
    lambda w: BraidWord(3, tuple(w))
).filter(lambda b: closure_info(b).num_components == 1)


@given(three_strand_knots)
def test_routes_agree_on_random_three_strand_knots(b):
    minor = alexander_from_braid(b, check_columns=True).poly
    assert equal_up_to_units(minor, alexander_burau(b))
    assert minor.invert_variables() == minor
    assert abs(minor.evaluate_at_one()) == 1


links = st.integers(2, 4).flatmap(
    lambda k: st.lists(st.integers(1, k - 1).flatmap(lambda i: st.sampled_from([i, -i])), max_size=9).map(
        lambda w: BraidWord(k, tuple(w))
    )
)


@given(links)
def test_column_independence(b):
    alexander_from_braid(b, check_columns=True)


@given(links.filter(lambda b: closure_info(b).num_components == 2))
def test_first_torres_condition_on_two_component_links(b):
    info = closure_info(b)
    delta = alexander_from_braid(b).poly
    for drop, keep in ((1, 0), (0, 1)):
        knot = alexander_from_braid(sublink(b, [keep])).poly
        lk = info.linking[0][1]
        assert equal_up_to_units(torres_specialize(delta, drop), torres_prediction(knot, [lk]))


def test_borromean_rings():
    b = borromean_block_braid(1)
    delta = alexander_from_braid(b, check_columns=True).poly
    t1, t2, t3 = (LaurentPoly.var(3, i) for i in range(3))
    assert equal_up_to_units(delta, (t1 - 1) * (t2 - 1) * (t3 - 1))
    for pair in ((0, 1), (0, 2), (1, 2)):
        assert alexander_from_braid(sublink(b, pair)).poly.is_zero()


def test_iterated_borromean_polynomials_differ():
    polys = [alexander_from_braid(borromean_block_braid(p)).poly for p in (1, 2, 3)]
    assert not equal_up_to_units(polys[0], polys[1])
    assert not equal_up_to_units(polys[1], polys[2])


def test_axis_link_torres():
    b = torus_braid(2, 3)
    res = alexander_with_axis(b)
    assert res.num_components == 2
    # axis variable is last; remove it: (t^3 - 1)/(t - 1) * Delta_trefoil
    reduced = torres_specialize(res.poly, 1)
    assert equal_up_to_units(reduced, torres_prediction(TREFOIL, [3]))
    assert equal_up_to_units(res.poly, alexander_with_axis(b, column=0).poly)


def test_hopf_link_as_unknot_with_axis():
    assert alexander_with_axis(BraidWord(1)).poly == LaurentPoly.constant(2, 1)


def test_cable_alexander_examples():
    assert cable_alexander(TREFOIL, 1, 1) == torus_knot_alexander(2, 3)
    assert equal_up_to_units(cable_alexander(LaurentPoly.constant(1, 1), 2, 5), torus_knot_alexander(2, 5))
    assert equal_up_to_units(cable_alexander(TREFOIL, 3, 1), substitute(TREFOIL, [t ** 3]))
    with pytest.raises(ValueError):
        cable_alexander(TREFOIL, 2, 4)


@pytest.mark.parametrize("p", [1, 2, 3])
def test_braid_cable_matches_satellite_formula(p):
    b = cable_with_core(TREFOIL_BRAID, p)
    cable_only = sublink(b, [1])
    assert equal_up_to_units(alexander_from_braid(cable_only).poly, cable_alexander(TREFOIL, p, 1))
    core = sublink(b, [0])
    assert equal_up_to_units(alexander_from_braid(core).poly, TREFOIL)


@pytest.mark.parametrize("p", [2, 3])
def test_knot_plus_meridian_has_knot_polynomial(p):
    # Delta_{M u gamma}(t_gamma, t_M) = Delta_gamma(t_gamma) for a meridian M of gamma
    b = add_meridian(torus_braid(p, p + 1))
    delta = alexander_from_braid(b).poly
    expected = torus_knot_alexander(p, p + 1).embed(2, [0])
    assert equal_up_to_units(delta, expected)


@pytest.mark.parametrize("p", [2, 3])
def test_torres_on_clasp_model(p):
    # K u gamma_p with gamma_p = T(p,p+1), K = trefoil, lk = 1
    b = clasp(torus_braid(p, p + 1), TREFOIL_BRAID)
    delta = alexander_from_braid(b).poly
    reduced = torres_specialize(delta, 1)
    assert equal_up_to_units(reduced, torus_knot_alexander(p, p + 1))


def test_torres_specialize_absent_variable():
    t2 = LaurentPoly.var(2, 1)
    p = t2 ** 2 - 3 + t2 ** -1
    assert torres_specialize(p, 0) == p.drop_variable(0)
    with pytest.raises(ValueError):
        torres_specialize(TREFOIL, 0)


def test_torres_prediction_three_components():
    d = torus_knot_alexander(2, 3).embed(2, [1])
    pred = torres_prediction(d, [1, 0])
    t2 = LaurentPoly.var(2, 0)
    assert pred == (t2 - 1) * torus_knot_alexander(2, 3).embed(2, [1])
    assert nonzero_term_count(pred) == 6


def test_nonzero_term_count_examples():
    assert nonzero_term_count(torus_knot_alexander(2, 3)) == 3
    assert nonzero_term_count(torus_knot_alexander(3, 4)) == 5
    assert nonzero_term_count(LaurentPoly.zero(1)) == 0
