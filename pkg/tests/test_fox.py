import pytest
from hypothesis import given, settings, strategies as st

from linksurgery.braid import BraidWord, closure_info, torus_braid
from linksurgery.fox import (
    FreeWord,
    GroupPresentation,
    abelianize,
    alexander_matrix,
    artin_action,
    axis_presentation,
    closure_presentation,
    fox_abelian,
    fox_derivative,
    gen,
    word_abelianization,
)
from linksurgery.laurent import LaurentPoly, equal_up_to_units

from conftest import braid_words

words = st.lists(st.integers(1, 4).flatmap(lambda g: st.sampled_from([g, -g])), max_size=20)


def test_free_reduction():
    assert FreeWord((1, 2, -2, -1, 3)) == FreeWord((3,))
    assert FreeWord((1, -1)) == ()
    assert gen(2).inverse() == FreeWord((-2,))
    assert FreeWord((1, 2)) ** -1 == FreeWord((-2, -1))


@given(words, words, words)
def test_free_reduction_confluent(a, b, c):
    stepwise = FreeWord(a) * FreeWord(b) * FreeWord(c)
    assert stepwise == FreeWord(list(a) + list(b) + list(c))


def test_artin_action_definition():
    assert artin_action(BraidWord(3)) == (gen(1), gen(2), gen(3))
    assert artin_action(BraidWord(2, (1,))) == (FreeWord((1, 2, -1)), gen(1))


@given(braid_words(max_len=6))
def test_artin_inverse_is_inverse(b):
    images = artin_action(b * b.inverse())
    assert images == tuple(gen(j) for j in range(1, b.strands + 1))


@pytest.mark.parametrize("k", [3, 4, 5])
def test_artin_action_respects_braid_relations(k):
    for i in range(1, k - 1):
        assert artin_action(BraidWord(k, (i, i + 1, i))) == artin_action(BraidWord(k, (i + 1, i, i + 1)))
    for i in range(1, k):
        for j in range(i + 2, k):
            assert artin_action(BraidWord(k, (i, j))) == artin_action(BraidWord(k, (j, i)))


def test_unknot_presentation_is_free_rank_one():
    p = closure_presentation(BraidWord(1))
    assert p.num_generators == 1 and p.relators == ()
    assert alexander_matrix(p) == []


def test_trefoil_presentation_shape():
    p = closure_presentation(BraidWord(2, (1, 1, 1)))
    assert p.num_generators == 2 and len(p.relators) == 1
    A = alexander_matrix(p)
    assert len(A) == 1 and len(A[0]) == 2
    t = LaurentPoly.var(1, 0)
    for j in range(2):
        assert equal_up_to_units(A[0][j], t ** 2 - t + 1)


def test_hopf_presentation_coloring():
    p = closure_presentation(BraidWord(2, (1, 1)))
    assert p.coloring == (0, 1)
    A = alexander_matrix(p)
    assert len(A) == 1 and len(A[0]) == 2
    assert A[0][0].nvars == 2


def test_fox_derivative_examples():
    assert fox_derivative(FreeWord((1,)), 1) == {FreeWord(): 1}
    col = (0, 0)
    assert fox_abelian((1, 2), 2, col, 1) == LaurentPoly.var(1, 0)
    t = LaurentPoly.var(1, 0)
    assert fox_abelian((-1,), 1, (0,), 1) == -LaurentPoly.var(1, 0, -1)
    # xyx y^-1 x^-1 y^-1, as in the hand computation in test_laurent
    r = (1, 2, 1, -2, -1, -2)
    assert fox_abelian(r, 1, col, 1) == 1 - t + t ** 2
    assert fox_abelian(r, 2, col, 1) == t - t ** 2 - 1


@given(words, st.lists(st.integers(0, 2), min_size=4, max_size=4))
def test_formal_and_abelian_derivatives_agree(w, coloring):
    for j in range(1, 5):
        formal = abelianize(fox_derivative(w, j), coloring, 3)
        assert formal == fox_abelian(w, j, coloring, 3)


def _fundamental_identity_holds(w, coloring, ncomp):
    lhs = LaurentPoly.zero(ncomp)
    for j in range(1, len(coloring) + 1):
        lhs = lhs + fox_abelian(w, j, coloring, ncomp) * (LaurentPoly.var(ncomp, coloring[j - 1]) - 1)
    return lhs == word_abelianization(w, coloring, ncomp) - 1


@settings(max_examples=200)
@given(words, st.lists(st.integers(0, 3), min_size=4, max_size=4))
def test_fundamental_formula(w, coloring):
    ncomp = max(coloring) + 1
    assert _fundamental_identity_holds(w, coloring, ncomp)


@given(braid_words(min_strands=2, max_len=8))
def test_longitude_abelianization(b):
    info = closure_info(b)
    p = closure_presentation(b)
    n = info.num_components
    for i in range(n):
        expected = [info.linking[i][j] if j != i else 0 for j in range(n)]
        assert word_abelianization(p.longitudes[i], p.coloring, n) == LaurentPoly.monomial(n, expected)
        assert word_abelianization(p.meridians[i], p.coloring, n) == LaurentPoly.var(n, i)


def test_axis_presentation_shape():
    p = axis_presentation(torus_braid(2, 3))
    assert p.num_generators == 4 and len(p.relators) == 3
    assert p.coloring == (0, 0, 0, 1)


def test_presentation_text_round_trip():
    p = closure_presentation(BraidWord(3, (1, 1, 2, -1)))
    q = GroupPresentation.parse(p.to_text())
    assert q == p
    r = GroupPresentation.parse("gens=2; rel= 1 2 1 -2 -1 -2; color= 1 1")
    assert r.relators == (FreeWord((1, 2, 1, -2, -1, -2)),)
    assert r.coloring == (0, 0)
    with pytest.raises(ValueError):
        GroupPresentation.parse("rel= 1")
    with pytest.raises(ValueError):
        GroupPresentation.parse("gens=1; rel= 2")


def test_alexander_matrix_requires_coloring():
    with pytest.raises(ValueError):
        alexander_matrix(GroupPresentation(1, ((1, 1),)))
