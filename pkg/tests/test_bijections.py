import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from slopevar.bijections import (augment, btp_count, enumerate_btp, is_btp, is_proper, phi,
                                 phi_inverse, straighten, theta, theta_inverse, unaugment,
                                 unstraighten)
from slopevar.complex import admissible_trees, is_admissible
from slopevar.errors import ElementPresent, NotProper
from slopevar.trees import SetTree, graft_subtree

FIGURE_T = SetTree.parse("(12345 (4) (125 (1) (25 (2) (5))))")
FIGURE_PSI = SetTree.parse("(12345 (4) (235 (2) (35 (3) (5))))")


def partitions(lo=2, hi=7):
    return st.integers(lo + 1, hi).flatmap(
        lambda n: st.sampled_from(enumerate_btp(range(lo, n + 1))))


def test_text_roundtrip():
    assert str(FIGURE_T) == "(12345 (4) (125 (1) (25 (2) (5))))"
    wide = SetTree((1, 10), SetTree((1,)), SetTree((10,)))
    assert wide.to_text() == "(1,10 (1) (10))"
    assert SetTree.parse(wide.to_text()) == wide
    with pytest.raises(ValueError):
        SetTree.parse("(12 (1)")


def test_json_roundtrip():
    assert SetTree.from_json(FIGURE_T.to_json()) == FIGURE_T
    assert FIGURE_T.to_json()[1] == [[4]]


def test_graft_subtree():
    t = graft_subtree(FIGURE_T, (1, 1), SetTree.parse("(25 (5) (2))"))
    assert t.younger.younger.older.label == (5,)


def test_straightening_figure():
    assert straighten(FIGURE_T, 3) == FIGURE_PSI
    assert unstraighten(FIGURE_PSI, 3, 1) == FIGURE_T


@pytest.mark.parametrize("n", range(1, 8))
def test_btp_counts(n):
    trees = enumerate_btp(n)
    assert len(trees) == btp_count(n)
    assert all(is_btp(t, n) for t in trees)
    assert len(set(trees)) == len(trees)


def test_augment_rules():
    t = SetTree.parse("(23 (2) (3))")
    a = augment(t, 1)
    assert a.label == (1, 2, 3) and is_proper(a, 1)
    assert unaugment(a, 1) == t
    assert not is_proper(augment(t, 4), 4)
    with pytest.raises(ElementPresent):
        augment(t, 2)
    with pytest.raises(NotProper):
        phi(augment(t, 4), 4)


@pytest.mark.parametrize("n", range(3, 8))
def test_theta_is_bijection(n):
    images = []
    for T in enumerate_btp(range(2, n + 1)):
        U = theta(T)
        assert is_admissible(U)
        assert U.shape() == T.shape()
        assert theta_inverse(U) == T
        images.append(U)
    assert set(images) == set(admissible_trees(n))
    assert len(images) == len(set(images))


@settings(max_examples=60, deadline=None)
@given(partitions(), st.data())
def test_straighten_roundtrip(T, data):
    j = data.draw(st.integers(1, 20).filter(lambda x: x not in T.labelset))
    aug = augment(T, j)
    s = straighten(aug, j)
    assert s.label == aug.label
    assert unstraighten(s, j, min(aug.label)) == aug


@settings(max_examples=60, deadline=None)
@given(partitions(lo=3, hi=8), st.integers(1, 2))
def test_phi_roundtrip_any_proper_element(T, j):
    U = phi(augment(T, j), j)
    assert is_admissible(U)
    assert unaugment(phi_inverse(U, j), j) == T


@settings(max_examples=60, deadline=None)
@given(partitions(), st.integers(0, 9), st.sampled_from(["text", "json"]))
def test_serialisation_roundtrip_with_wide_labels(T, shift, kind):
    T = T.map_labels(lambda x: x + shift)
    if kind == "text":
        assert SetTree.parse(T.to_text()) == T
    else:
        assert SetTree.from_json(T.to_json()) == T
