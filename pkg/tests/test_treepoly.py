import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from slopevar.errors import NotPseudocircuit, NotSpanningTree
from slopevar.graph import Wheel, complete_graph, coupled_trees, spanning_trees, wheels_in_complete_graph
from slopevar.groebner import slope_configuration
from slopevar.polynomial import GLEX, GREVLEX, TermOrder, equal_up_to_sign, mono_edges, mono_from_edges
from slopevar.treepoly import (CENTER_MAX, CENTER_MIN, CRITICAL_EDGE, REVLEX_SEARCH,
                               all_coupled_trees, coupled_trees_by_valence, critical_edge,
                               leading_tree, leading_tree_with_case, nonconstant_valences,
                               tree_polynomial, valence_on_spokes, wheel_polynomial)

WHEELS_6 = wheels_in_complete_graph(6)


def wheels(max_vertex=7):
    return st.integers(4, max_vertex).flatmap(
        lambda size: st.permutations(range(1, size + 1)).map(lambda p: Wheel(p[0], tuple(p[1:]))))


def test_k4_polynomial_has_twelve_terms():
    p = tree_polynomial(complete_graph(4))
    assert len(p) == 12
    assert set(p.terms.values()) == {1, -1}


def test_k4_vanishes_on_collinear_slopes():
    # four points on a parabola
    pts = {1: (0, 0), 2: (1, 1), 3: (2, 4), 4: (3, 9)}
    slopes = {(i, j): Fraction(pts[j][1] - pts[i][1], pts[j][0] - pts[i][0])
              for i in pts for j in pts if i < j}
    assert tree_polynomial(complete_graph(4)).evaluate(slopes) == 0


def test_rejects_bad_inputs():
    with pytest.raises(NotPseudocircuit):
        tree_polynomial(complete_graph(5))
    with pytest.raises(NotSpanningTree):
        tree_polynomial(complete_graph(4), frozenset({(1, 2), (2, 3), (1, 3)}))


@pytest.mark.parametrize("W", WHEELS_6[::7], ids=str)
def test_determinant_equals_closed_form(W):
    assert equal_up_to_sign(tree_polynomial(W), wheel_polynomial(W))


@pytest.mark.parametrize("W", WHEELS_6[::11], ids=str)
def test_polynomial_shape(W):
    p = wheel_polynomial(W)
    assert len(p) == 2 ** (W.k + 1) - 4
    assert p.is_homogeneous() and p.degree() == len(W.vertices) - 1
    assert set(p.terms.values()) <= {1, -1}
    support = {mono_edges(m) for m in p.monomials()}
    assert support == set(coupled_trees(W.edges))


@settings(max_examples=15, deadline=None)
@given(wheels(6), st.data())
def test_choice_of_spanning_tree_only_changes_sign(W, data):
    T = data.draw(st.sampled_from(sorted(spanning_trees(W.edges), key=sorted)))
    assert equal_up_to_sign(tree_polynomial(W, T), wheel_polynomial(W))


@settings(max_examples=20, deadline=None)
@given(wheels(7), st.integers(0, 10 ** 6))
def test_vanishes_on_slopes(W, seed):
    point = slope_configuration(max(W.vertices), random.Random(seed))
    assert wheel_polynomial(W).evaluate(point) == 0


@settings(max_examples=40, deadline=None)
@given(wheels(7), st.sampled_from([GLEX, GREVLEX]))
def test_leading_tree_is_leading_term(W, kind):
    order = TermOrder(kind)
    T = leading_tree(W, order)
    assert mono_from_edges(T) == wheel_polynomial(W).leading_monomial(order)


def test_leading_tree_cases():
    assert leading_tree_with_case(Wheel.parse("1;2,3,4,5"))[1] == CENTER_MIN
    assert leading_tree_with_case(Wheel.parse("5;1,2,3,4"))[1] == CENTER_MAX
    T, case = leading_tree_with_case(Wheel.parse("3;1,2,4,5"))
    assert case == CRITICAL_EDGE
    assert T == {(1, 2), (1, 3), (2, 4), (3, 5)}
    assert leading_tree_with_case(Wheel.parse("3;1,2,4,5"), TermOrder(GREVLEX))[1] == REVLEX_SEARCH


def test_center_min_formula():
    # radii minus v0v1 plus vkv1, with v1 the largest spoke
    W = Wheel.parse("1;2,3,4,5")
    assert leading_tree(W) == {(1, 2), (1, 3), (1, 4), (2, 5)}


def test_critical_edge_lies_in_exactly_one_tree():
    W = Wheel.parse("3;1,2,4,5")
    d = tuple(1 if v > 3 else 2 for v in W.spokes)
    T1, T2 = coupled_trees_by_valence(W, d)
    assert critical_edge(W) in T1 ^ T2


@pytest.mark.parametrize("k", [3, 4, 5])
def test_valence_generation_covers_all_coupled_trees(k):
    W = Wheel(1, tuple(range(2, k + 2)))
    trees = set(all_coupled_trees(W))
    assert trees == set(coupled_trees(W.edges))
    assert len(list(nonconstant_valences(k))) == 2 ** k - 2
    for T in trees:
        d = valence_on_spokes(W, T)
        assert set(d) <= {1, 2} and len(set(d)) == 2
        assert T in coupled_trees_by_valence(W, d)
