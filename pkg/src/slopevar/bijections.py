"""Binary total partitions and their bijection with admissible trees.

A binary total partition of ``V`` is a binary tree of subsets: the root is
``V``, leaves are singletons, and each internal node is the disjoint union of
its children with ``max`` of the node in the younger child.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Optional, Tuple

from .errors import ElementPresent, NotProper
from .trees import SetTree

BinaryTotalPartition = SetTree


def _vertices(V) -> Tuple[int, ...]:
    if isinstance(V, int):
        V = range(1, V + 1)
    return tuple(sorted(set(V)))


@lru_cache(maxsize=None)
def _btp(V: Tuple[int, ...]) -> tuple:
    if not V:
        raise ValueError("empty vertex set")
    if len(V) == 1:
        return (SetTree(V),)
    others = V[:-1]
    out = []
    for r in range(1, len(others) + 1):
        for X1 in combinations(others, r):
            X2 = tuple(v for v in V if v not in X1)
            for left in _btp(X1):
                for right in _btp(X2):
                    out.append(SetTree(V, left, right))
    return tuple(sorted(out, key=SetTree.traversal))


def enumerate_btp(V) -> list:
    """All binary total partitions of ``V``, ordered by preorder label sequence."""
    return list(_btp(_vertices(V)))


def btp_count(size: int) -> int:
    """``(2m-3)!!`` for ``m = size`` elements."""
    out = 1
    for odd in range(2 * size - 3, 0, -2):
        out *= odd
    return out


def is_btp(tree: SetTree, V=None) -> bool:
    if V is not None and tree.labelset != frozenset(_vertices(V)):
        return False
    for t in tree.preorder():
        if not t.label:
            return False
        if t.is_leaf:
            if len(t.label) != 1:
                return False
            continue
        A, B = t.older.labelset, t.younger.labelset
        if A & B or A | B != t.labelset or max(t.label) not in B:
            return False
    return True


def augment(tree: SetTree, j: int) -> SetTree:
    """Add ``j`` to the root label."""
    if j in tree.labelset:
        raise ElementPresent(f"{j} already in the root")
    return tree.with_root(tree.labelset | {j})


def unaugment(tree: SetTree, j: int) -> SetTree:
    if j not in tree.labelset:
        raise ValueError(f"{j} is not in the root")
    return tree.with_root(tree.labelset - {j})


def is_proper(tree: SetTree, j: int) -> bool:
    """An augmented tree is proper when the added element is below everything else."""
    rest = tree.labelset - {j}
    return j in tree.labelset and bool(rest) and j < min(rest)


def straighten(tree: SetTree, j: int) -> SetTree:
    """Relabel a tree augmented by ``j`` so the added element becomes the root minimum.

    Each ``k < j`` of the root is replaced by the next larger root element in
    every non-root label.  The root label is untouched.
    """
    root = sorted(tree.label)
    if j not in root:
        raise ValueError(f"{j} is not in the root")
    below = [v for v in root if v <= j]
    shift = {below[i]: below[i + 1] for i in range(len(below) - 1)}
    return tree.map_labels(lambda x: shift.get(x, x), root=False)


def unstraighten(tree: SetTree, j: int, jp: Optional[int] = None) -> SetTree:
    """Inverse of :func:`straighten` for the added element ``j``; ``jp`` is the root minimum."""
    root = sorted(tree.label)
    if jp is None:
        jp = root[0]
    if jp != root[0] or j not in root:
        raise ValueError("unstraighten needs jp = min(root) and j in the root")
    below = [v for v in root if v <= j]
    shift = {below[i + 1]: below[i] for i in range(len(below) - 1)}
    return tree.map_labels(lambda x: shift.get(x, x), root=False)


def phi(tree: SetTree, j: Optional[int] = None) -> SetTree:
    """Map a proper augmented partition to an admissible decomposition tree of the same shape."""
    if j is None:
        j = min(tree.label)
    if not is_proper(tree, j):
        raise NotProper(f"{j} must be the strict minimum of the root")
    S = tree.labelset - {j}
    if len(S) == 1:
        if not tree.is_leaf:
            raise ValueError("a two-element root must be a leaf")
        return tree
    if tree.is_leaf:
        raise ValueError("internal node expected")
    T1, T2 = tree.older, tree.younger
    if T1.labelset | T2.labelset != S:
        raise ValueError("children must partition the root minus the added element")
    left = phi(augment(T1, j), j)
    m = max(T1.label)
    aug = augment(T2, m)
    jp = min(aug.label)
    right = phi(straighten(aug, m), jp)
    return SetTree(tree.label, left, right)


def phi_inverse(tree: SetTree, j: Optional[int] = None) -> SetTree:
    """Inverse of :func:`phi`: peel the root, then undo augmenting and straightening."""
    if j is None:
        j = min(tree.label)
    if tree.is_leaf:
        return tree
    U1, U2 = tree.older, tree.younger
    m = max(U1.label)
    k = min(U2.label)
    T1 = unaugment(phi_inverse(U1, j), j)
    T2 = unaugment(unstraighten(phi_inverse(U2, k), m, k), m)
    return SetTree(tree.label, T1, T2)


def theta(tree: SetTree, j: int = 1) -> SetTree:
    """``phi`` after augmenting by ``j`` (default 1): partitions of ``[2, n]`` to trees on ``[1, n]``."""
    return phi(augment(tree, j), j)


def theta_inverse(tree: SetTree) -> SetTree:
    j = min(tree.label)
    return unaugment(phi_inverse(tree, j), j)
