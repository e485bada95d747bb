"""Decreasing planar trees, the largest-leaf statistic, and the degree recurrence."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Optional, Tuple

from .errors import IdentityViolation, LabelClash, OrderViolation, OutOfRange, ScaleLimit

ENUMERATION_LIMIT = 9
DPT_ENUMERATE_LIMIT = 8


@dataclass(frozen=True)
class RootedPlanarTree:
    """A labelled node with an ordered tuple of children (oldest first)."""

    label: int
    children: Tuple["RootedPlanarTree", ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "children", tuple(self.children))

    def nodes(self):
        """Preorder: a node, then its subtrees from oldest to youngest."""
        stack = [self]
        while stack:
            t = stack.pop()
            yield t
            stack.extend(reversed(t.children))

    def labels(self) -> list:
        return [t.label for t in self.nodes()]

    def leaves(self) -> list:
        return [t.label for t in self.nodes() if not t.children]

    def size(self) -> int:
        return sum(1 for _ in self.nodes())

    def find(self, label: int) -> Optional["RootedPlanarTree"]:
        for t in self.nodes():
            if t.label == label:
                return t
        return None

    def to_text(self) -> str:
        if not self.children:
            return str(self.label)
        return f"{self.label}(" + " ".join(c.to_text() for c in self.children) + ")"

    def __str__(self):
        return self.to_text()


DecreasingPlanarTree = RootedPlanarTree


def is_decreasing(T: RootedPlanarTree) -> bool:
    for t in T.nodes():
        if any(c.label > t.label for c in t.children):
            return False
    return len(set(T.labels())) == T.size()


def largest_leaf(T: RootedPlanarTree) -> int:
    return max(T.leaves())


def path_tree(labels) -> RootedPlanarTree:
    """The path whose root is ``labels[0]``, each node having the next as only child."""
    labels = list(labels)
    t = RootedPlanarTree(labels[-1])
    for v in reversed(labels[:-1]):
        t = RootedPlanarTree(v, (t,))
    return t


def graft(T1: RootedPlanarTree, T2: RootedPlanarTree, at: Optional[int] = None) -> RootedPlanarTree:
    """Attach ``T1`` as the oldest subtree of node ``at`` (default: the root) of ``T2``."""
    if at is None:
        at = T2.label
    if set(T1.labels()) & set(T2.labels()):
        raise LabelClash("trees share labels")
    if T2.find(at) is None:
        raise ValueError(f"no node {at} in the target tree")
    if is_decreasing(T1) and is_decreasing(T2) and T1.label > at:
        raise OrderViolation(f"root {T1.label} exceeds attachment node {at}")

    def walk(t):
        if t.label == at:
            return RootedPlanarTree(t.label, (T1,) + t.children)
        return RootedPlanarTree(t.label, tuple(walk(c) for c in t.children))

    return walk(T2)


def detach_first(T: RootedPlanarTree) -> Tuple[RootedPlanarTree, RootedPlanarTree]:
    """Split ``T`` into its oldest root subtree and the remainder."""
    if not T.children:
        raise ValueError("a single node has no subtree to detach")
    return T.children[0], RootedPlanarTree(T.label, T.children[1:])


@lru_cache(maxsize=None)
def _dpt_trees(V: Tuple[int, ...]) -> tuple:
    if len(V) == 1:
        return (RootedPlanarTree(V[0]),)
    others = V[:-1]
    out = []
    for r in range(1, len(others) + 1):
        for V1 in combinations(others, r):
            V2 = tuple(v for v in V if v not in V1)
            for T1 in _dpt_trees(V1):
                for T2 in _dpt_trees(V2):
                    out.append(RootedPlanarTree(T2.label, (T1,) + T2.children))
    return tuple(out)


def enumerate_dpt(n) -> list:
    """All decreasing planar trees on ``[1, n]`` (or on a given vertex set)."""
    V = tuple(range(1, n + 1)) if isinstance(n, int) else tuple(sorted(set(n)))
    if not V:
        raise ValueError("empty vertex set")
    if len(V) > ENUMERATION_LIMIT:
        raise ScaleLimit(f"enumeration supports at most {ENUMERATION_LIMIT} vertices")
    return list(_dpt_trees(V))


def double_factorial(m: int) -> int:
    out = 1
    for x in range(m, 0, -2):
        out *= x
    return out


# -- dpt(n, k) --------------------------------------------------------------------

def binom(n: int, k: int) -> int:
    """Binomial coefficient, zero outside ``0 <= k <= n``."""
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)


@lru_cache(maxsize=None)
def dpt_recurrence(n: int, k: int) -> int:
    """Trees on ``[1, n]`` with largest leaf at most ``k``, by the grafting recurrence.

    ``dpt(0, k) = 1``; for ``n > 0``, zero unless ``1 <= k <= n``.
    """
    if n == 0:
        return 1
    if n < 0 or k < 1 or k > n:
        return 0
    if k == n:
        return 1 if n == 1 else dpt_recurrence(n, n - 1)
    return sum(binom(k, a) * dpt_recurrence(a, a) * dpt_recurrence(n - a, k + 1 - a)
               for a in range(1, k + 1))


@lru_cache(maxsize=None)
def _leaf_histogram(n: int) -> tuple:
    counts = [0] * (n + 1)
    for T in enumerate_dpt(n):
        counts[largest_leaf(T)] += 1
    return tuple(counts)


def dpt_enumerate(n: int, k: int) -> int:
    if n == 0:
        return 1
    if n > DPT_ENUMERATE_LIMIT:
        raise ScaleLimit(f"enumeration supports n <= {DPT_ENUMERATE_LIMIT}")
    if k < 1 or k > n:
        return 0
    return sum(_leaf_histogram(n)[1:k + 1])


def dpt(n: int, k: int, method: str = "recurrence") -> int:
    if method == "recurrence":
        return dpt_recurrence(n, k)
    if method == "enumerate":
        return dpt_enumerate(n, k)
    raise ValueError(f"unknown method {method!r}")


def dpt_table(n_max: int, method: str = "recurrence") -> dict:
    return {n: [dpt(n, k, method) for k in range(1, n + 1)] for n in range(1, n_max + 1)}


# -- the displayed identities ---------------------------------------------------------

def _identities(n: int, k: int, d=dpt_recurrence) -> dict:
    """Both sides of each identity at ``(n, k)``, as ``name -> (lhs, rhs)``."""
    B = binom
    out = {}
    # grafting at k, read with k-1 in place of k
    out["graft-recurrence"] = (d(n, k - 1),
                               sum(B(k - 1, a) * d(a, a) * d(n - a, k - a) for a in range(1, k)))
    two_left = sum(B(k - 1, a) * B(n - k - 1, c) * d(a + c, a) * d(n - a - c, k - a)
                   for a in range(1, k) for c in range(1, n - k))
    two_right = sum(B(k - 1, w) * B(n - k - 1, y) * d(w + y, w + 1) * d(n - w - y, k - w - 1)
                    for w in range(0, k - 1) for y in range(1, n - k))
    out["subtree-reindex"] = (two_left, two_right)
    out["first-subtree-split"] = (d(n, k), d(n - 1, k) + sum(
        B(k, a) * B(n - k - 1, c) * d(a + c, a) * d(n - a - c, k - a)
        for a in range(1, k) for c in range(0, n - k)))
    first = sum(B(k - 1, a) * B(n - k - 1, c) * d(a + c, a) * d(n - a - c, k - a)
                for a in range(1, k) for c in range(0, n - k))
    second = sum(B(k - 1, a - 1) * B(n - k - 1, c) * d(a + c, a) * d(n - a - c, k - a)
                 for a in range(1, k) for c in range(0, n - k))
    out["pascal-split"] = (d(n, k), d(n - 1, k) + first + second)
    single = sum(B(k - 1, a) * d(a, a) * d(n - a, k - a) for a in range(1, k))
    out["c-zero-split"] = (d(n, k), d(n - 1, k) + single + two_left + second)
    out["combined-split"] = (d(n, k), d(n - 1, k) + d(n, k - 1) + two_right + second)
    shifted_a = sum(B(k - 1, w) * B(n - k - 1, x - 1) * d(n - k + w - x, w + 1)
                    * d(k - w + x, k - w - 1) for w in range(0, k - 1) for x in range(0, n - k))
    shifted_b = sum(B(k - 1, w) * B(n - k - 1, x) * d(n - k + w - x, w + 1)
                    * d(k - w + x, k - w - 1) for w in range(0, k - 1) for x in range(0, n - k))
    out["reindexed"] = (d(n, k), d(n - 1, k) + d(n, k - 1) + shifted_a + shifted_b)
    out["two-term-recurrence"] = (d(n, k), d(n - 1, k) + d(n, k - 1) + sum(
        B(k - 1, w) * B(n - k, x) * d(n - k + w - x, w + 1) * d(k - w + x, k - w - 1)
        for w in range(0, k - 1) for x in range(0, n - k)))
    return out


# Identities whose combinatorial argument needs a vertex above k; at k = n
# their inner sum is empty and they do not hold under any convention.
STRICT_K = frozenset({"first-subtree-split", "pascal-split"})

IDENTITY_NAMES = ("graft-recurrence", "subtree-reindex", "first-subtree-split",
                  "pascal-split", "c-zero-split", "combined-split", "reindexed",
                  "two-term-recurrence")


def identity_domain(name: str, n: int):
    """Values of ``k`` on which the identity is claimed."""
    top = n - 1 if name in STRICT_K else n
    return range(2, top + 1)


def evaluate_identity(name: str, n: int, k: int):
    return _identities(n, k)[name]


def dpt_identity_checks(n_max: int) -> dict:
    """Evaluate every identity on its domain for ``n <= n_max``.

    Returns ``name -> number of (n, k) cases checked``; raises
    :class:`IdentityViolation` with the failing case otherwise.
    """
    if n_max > DPT_ENUMERATE_LIMIT:
        raise ScaleLimit(f"identity checks support n_max <= {DPT_ENUMERATE_LIMIT}")
    report = {name: 0 for name in IDENTITY_NAMES}
    for n in range(2, n_max + 1):
        for name in IDENTITY_NAMES:
            for k in identity_domain(name, n):
                lhs, rhs = evaluate_identity(name, n, k)
                if lhs != rhs:
                    raise IdentityViolation(f"{name} fails at n={n}, k={k}: {lhs} != {rhs}",
                                            witness={"identity": name, "n": n, "k": k,
                                                     "lhs": lhs, "rhs": rhs})
                report[name] += 1
    return report


# -- degree lower bound -------------------------------------------------------------------

@lru_cache(maxsize=None)
def _e(n: int, k: int, literal: bool) -> int:
    if k == 0:
        return 0
    if k == n:
        return 1
    if n == 2 and k == 1:
        return 1
    # The diagonal point is zero-dimensional, so for k = n - 1 it is not a
    # top-dimensional piece and contributes nothing (unless ``literal``).
    total = _e(n, k + 1, literal) if (literal or k + 1 < n) else 0
    total += _e(n - 1, k - 1, literal)
    for t in range(1, k):
        for u in range(0, n - k - 1):
            total += (binom(k - 1, t) * binom(n - k - 1, u)
                      * _e(t + u + 1, t, literal) * _e(n - t - u, k - t + 1, literal))
    return total


def degree_lower_bound(n: int, k: int, literal: bool = False) -> int:
    """The recursive lower bound ``e(n, k)``, with ``e(n, n) = 1`` and ``e(n, 0) = 0``.

    By default the diagonal value is not fed back into the recurrence at
    ``k = n - 1``; ``literal=True`` feeds it back, which inflates every value
    with ``k < n`` (for example ``e(4, 1)`` becomes 7 instead of 3).
    """
    if n < 2 or not 1 <= k <= n:
        raise OutOfRange(f"need n >= 2 and 1 <= k <= n, got n={n}, k={k}")
    return _e(n, k, literal)
