import json

import pytest

from slopevar.complex import minimal_forbidden_edge_sets
from slopevar.errors import CompletionBudgetExceeded, ScaleLimit
from slopevar.groebner import (certify_groebner, hilbert_consistency, hilbert_function_from_h,
                               is_forbidden_monomial, k4_generation_probe,
                               leading_ideal_matches_forbidden_paths, leading_trees_match,
                               minimal_sets, standard_monomial_counts,
                               standard_monomial_degree, vanishes_on_slope_locus,
                               wheel_generators)
from slopevar.polynomial import GREVLEX, TermOrder


def test_generators_k5():
    gens = wheel_generators(5)
    assert len(gens) == 20
    gens.check()


def test_certificate_n4():
    cert = certify_groebner(4)
    assert cert["generators"] == 1 and cert["pairs"] == 0


def test_certificate_n5():
    cert = certify_groebner(5)
    assert cert["verified"]
    assert cert["pairs"] == 190
    assert cert["coprime_skipped"] + cert["reduced_to_zero"] == 190
    assert len(cert["pair_outcomes"]) == 190
    json.dumps(cert)


def test_certificate_is_deterministic():
    assert certify_groebner(5) == certify_groebner(5, jobs=2)


def test_certificate_limits():
    with pytest.raises(ScaleLimit):
        certify_groebner(6)
    with pytest.raises(ScaleLimit):
        certify_groebner(3)


@pytest.mark.parametrize("n", [4, 5, 6])
def test_leading_monomials_are_forbidden_paths(n):
    assert leading_ideal_matches_forbidden_paths(n)


def test_leading_monomials_grevlex():
    assert leading_ideal_matches_forbidden_paths(5, TermOrder(GREVLEX, 5))


def test_every_leading_monomial_contains_a_forbidden_path():
    for m in wheel_generators(6).leading_monomials():
        assert is_forbidden_monomial(m)


def test_minimal_sets():
    sets = [frozenset({1, 2}), frozenset({1, 2, 3}), frozenset({4})]
    assert minimal_sets(sets) == {frozenset({1, 2}), frozenset({4})}


@pytest.mark.parametrize("n", [4, 5, 6])
def test_leading_trees(n):
    assert leading_trees_match(n) > 0
    assert leading_trees_match(n, TermOrder(GREVLEX)) > 0


@pytest.mark.parametrize("n, deg", [(4, 3), (5, 15), (6, 105)])
def test_degree(n, deg):
    assert standard_monomial_degree(n) == deg


@pytest.mark.parametrize("n", [4, 5])
def test_hilbert_function(n):
    assert hilbert_consistency(n, 4)


def test_hilbert_function_k4():
    # K4: one cubic relation among six variables
    assert standard_monomial_counts(4, 3) == [1, 6, 21, 55]
    assert hilbert_function_from_h([1, 1, 1], 5, 3) == [1, 6, 21, 55]


def test_slope_locus():
    assert vanishes_on_slope_locus(wheel_generators(5).polynomials, 5, samples=100)


def test_k4_probe():
    report = k4_generation_probe(5)
    assert report["all_zero"] and report["wheels"] == 20
    with pytest.raises(CompletionBudgetExceeded):
        k4_generation_probe(6, max_pairs=1)


def test_forbidden_sets_are_antichain():
    sets = minimal_forbidden_edge_sets(6)
    assert minimal_sets(sets) == sets
