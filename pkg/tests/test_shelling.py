import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from slopevar.complex import facet_count_formula, facets
from slopevar.errors import DifferentComplex, OutOfRange, ScaleLimit
from slopevar.shelling import (METHODS, f_to_h, facet_compare, h_recurrence, h_vector,
                               h_vector_checked, hilbert_series_text, insert_pair,
                               long_pairs, m_recurrence, matching_census, matchings,
                               set_compare, shelling_order, shelling_set, verify_shelling)
from slopevar.trees import SetTree


def test_set_compare():
    assert set_compare({1, 2, 3}, {1, 2}) == 1
    assert set_compare({1, 3}, {2, 3}) == -1  # 1 is in the first set
    assert set_compare({2, 3}, {1, 3}) == 1
    assert set_compare({1, 2}, {1, 2}) == 0


def test_tree_compare_rejects_mixed_vertex_sets():
    with pytest.raises(DifferentComplex):
        facet_compare(SetTree((1, 2)), SetTree((1, 3)))


@pytest.mark.parametrize("n, h", [(3, [1, 0]), (4, [1, 1, 1]), (5, [1, 3, 6, 5]),
                                  (6, [1, 6, 21, 41, 36]), (7, [1, 10, 55, 185, 365, 329])])
def test_known_h_vectors(n, h):
    assert h_vector(n, "recurrence") == h


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_four_methods_agree(n):
    results = {m: h_vector(n, m) for m in METHODS}
    assert len({tuple(v) for v in results.values()}) == 1, results


def test_method_limits():
    assert h_vector_checked(9) == h_vector(9)
    with pytest.raises(ScaleLimit):
        h_vector(7, "ftransform")
    with pytest.raises(ScaleLimit):
        h_vector(8, "shelling")
    with pytest.raises(ValueError):
        h_vector(5, "magic")


@pytest.mark.parametrize("n", range(2, 11))
def test_h_sums_to_facet_count(n):
    assert sum(h_vector(n)) == facet_count_formula(n)


@pytest.mark.parametrize("n", range(0, 11))
def test_matching_recurrence_basics(n):
    assert m_recurrence(n, 0) == 1


@pytest.mark.parametrize("n", range(0, 7))
def test_matching_census_matches_recurrence(n):
    assert matching_census(n) == [m_recurrence(n, k) for k in range(n + 1)]


@pytest.mark.parametrize("n", range(1, 6))
def test_insert_pair_is_a_bijection(n):
    smaller = list(matchings(n - 1))
    made = [insert_pair(X, p) for X in smaller for p in range(2, 2 * n + 1)]
    assert len(made) == len(set(made))
    assert set(made) == set(matchings(n))
    with pytest.raises(OutOfRange):
        insert_pair(smaller[0], 1)


def test_long_pairs():
    assert long_pairs(((1, 2), (3, 6), (4, 5))) == 1


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_shelling_certificate(n):
    cert = verify_shelling(n)
    assert len(cert.facets) == facet_count_formula(n)
    assert cert.histogram() == h_vector(n)
    for F, R, W in zip(cert.facets, cert.restriction, cert.witnesses):
        assert R <= F
        assert set(W) == set(R)


def test_first_facet_has_empty_restriction():
    order = shelling_order(5)
    assert shelling_set(order[0][1]) == frozenset()
    assert sum(1 for _, T in order if not shelling_set(T)) == 1


def test_shelling_size_limit():
    with pytest.raises(ScaleLimit):
        verify_shelling(8)


@settings(max_examples=50, deadline=None)
@given(st.sampled_from(facets(6)), st.sampled_from(facets(6)), st.sampled_from(facets(6)))
def test_facet_order_is_total(F, G, H):
    assert facet_compare(F, G) == -facet_compare(G, F)
    assert (facet_compare(F, G) == 0) == (F == G)
    if facet_compare(F, G) < 0 and facet_compare(G, H) < 0:
        assert facet_compare(F, H) < 0


def test_f_to_h_on_simplex_boundary():
    # boundary of a triangle: 3 vertices, 3 edges -> h = (1, 1, 1)
    assert f_to_h([3, 3], 2) == [1, 1, 1]


def test_hilbert_text():
    assert hilbert_series_text(5) == "(1+3*t+6*t^2+5*t^3)/(1-t)^7"
    assert hilbert_series_text(2) == "1/(1-t)^1"
    assert hilbert_series_text(3) == "1/(1-t)^3"


@settings(max_examples=40, deadline=None)
@given(st.integers(4, 12), st.integers(-1, 12))
def test_h_recurrence_support(n, k):
    value = h_recurrence(n, k)
    assert (value > 0) == (0 <= k <= n - 2)
