"""A shelling of the facets, their restriction sets, and the h-vector four ways."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cmp_to_key, lru_cache
from math import comb
from typing import Dict, List, Tuple

from .complex import decomposition_tree, edg, f_vector, facets_with_trees
from .errors import (DifferentComplex, MethodDisagreement, OutOfRange,
                     ScaleLimit, ShellingViolation)
from .graph import EdgeSet
from .trees import SetTree

SHELLING_LIMIT = 7
FTRANSFORM_LIMIT = 6
METHODS = ("shelling", "recurrence", "matchings", "ftransform")


def _as_tree(F) -> SetTree:
    return F if isinstance(F, SetTree) else decomposition_tree(F, check=False)


def set_compare(X, Y) -> int:
    """Larger set wins; for equal sizes, the set missing ``min(X ^ Y)`` wins."""
    X, Y = frozenset(X), frozenset(Y)
    if len(X) != len(Y):
        return 1 if len(X) > len(Y) else -1
    diff = X ^ Y
    if not diff:
        return 0
    return 1 if min(diff) in Y else -1


def tree_compare(T: SetTree, U: SetTree) -> int:
    if T.labelset != U.labelset:
        raise DifferentComplex("facets live on different vertex sets")
    for X, Y in zip(T.traversal(), U.traversal()):
        if X != Y:
            return set_compare(X, Y)
    return 0


def facet_compare(F, G) -> int:
    """Compare facets (edge sets or decomposition trees) by their traversals."""
    return tree_compare(_as_tree(F), _as_tree(G))


def spine(tree: SetTree) -> List[SetTree]:
    """The root together with every firstborn node."""
    return [tree] + list(tree.firstborn())


def spine_edges(tree: SetTree) -> EdgeSet:
    return frozenset(edg(t.label) for t in spine(tree))


def shelling_set(F) -> EdgeSet:
    """Restriction set of a facet in the shelling order."""
    tree = _as_tree(F)
    out = set()
    while len(tree.label) > 3:
        older = tree.older
        if older.label != tree.label[:2]:
            out |= spine_edges(older)
        tree = tree.younger
    return frozenset(out)


@dataclass
class ShellingCertificate:
    """Facets in shelling order, with restriction sets and SH2 witnesses."""

    n: int
    facets: List[EdgeSet]
    restriction: List[EdgeSet]
    witnesses: List[Dict[Tuple[int, int], int]] = field(default_factory=list)
    pairs_checked: int = 0

    def histogram(self) -> List[int]:
        out = [0] * (max(self.n - 1, 1))
        for R in self.restriction:
            out[len(R)] += 1
        return out

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "facets": len(self.facets),
            "sh1_pairs_checked": self.pairs_checked,
            "histogram": self.histogram(),
            "order": [
                {
                    "facet": [list(e) for e in sorted(F)],
                    "restriction": [list(e) for e in sorted(R)],
                    "witnesses": {f"{e[0]}-{e[1]}": g for e, g in sorted(W.items())},
                }
                for F, R, W in zip(self.facets, self.restriction, self.witnesses)
            ],
        }


def shelling_order(n) -> List[Tuple[EdgeSet, SetTree]]:
    """Facets with trees, earliest (smallest) first."""
    pairs = facets_with_trees(n)
    return sorted(pairs, key=cmp_to_key(lambda a, b: tree_compare(a[1], b[1])))


def verify_shelling(n: int) -> ShellingCertificate:
    """Check SH1 and SH2 for every facet; raise :class:`ShellingViolation` on failure."""
    if n > SHELLING_LIMIT:
        raise ScaleLimit(f"shelling verification supports n <= {SHELLING_LIMIT}")
    if n < 2:
        raise OutOfRange("need n >= 2")
    order = shelling_order(n)
    facets = [F for F, _ in order]
    restr = [shelling_set(T) for _, T in order]
    position = {F: i for i, F in enumerate(facets)}
    for i in range(len(order) - 1):
        if tree_compare(order[i][1], order[i + 1][1]) >= 0:
            raise ShellingViolation("facet order is not strict", witness=i)
    pairs = 0
    for i, R in enumerate(restr):
        if len(R) > max(n - 2, 0):
            raise ShellingViolation(f"restriction set too large at facet {i}", witness=i)
        for j in range(i):
            pairs += 1
            if R <= facets[j]:
                raise ShellingViolation(
                    f"SH1 fails: restriction of facet {i} lies in earlier facet {j}",
                    witness={"facet": sorted(facets[i]), "earlier": sorted(facets[j])})
    all_edges = frozenset(e for F in facets for e in F)
    witnesses = []
    for i, (F, R) in enumerate(zip(facets, restr)):
        found = {}
        for e in sorted(R):
            base = F - {e}
            for e2 in sorted(all_edges - F):
                j = position.get(base | {e2})
                if j is not None and j < i:
                    found[e] = j
                    break
            else:
                raise ShellingViolation(
                    f"SH2 fails: no earlier facet differs from facet {i} only at {e}",
                    witness={"facet": sorted(F), "edge": e})
        witnesses.append(found)
    return ShellingCertificate(n, facets, restr, witnesses, pairs)


# -- h-vectors ---------------------------------------------------------------------

@lru_cache(maxsize=None)
def h_recurrence(n: int, k: int) -> int:
    if n < 2 or k < 0 or k > n - 2:
        return 0
    if k == 0:
        return 1
    return (h_recurrence(n - 1, k) + (n + k - 4) * h_recurrence(n - 1, k - 1)
            + (n - k - 1) * h_recurrence(n - 1, k - 2))


@lru_cache(maxsize=None)
def m_recurrence(n: int, k: int) -> int:
    """Matchings on ``[1, 2n]`` with ``k`` long pairs, by recurrence."""
    if n < 0 or k < 0 or k > n:
        return 0
    if k == 0:
        return 1
    return (m_recurrence(n - 1, k) + (n + k - 2) * m_recurrence(n - 1, k - 1)
            + (n - k + 1) * m_recurrence(n - 1, k - 2))


Matching = Tuple[Tuple[int, int], ...]


def matchings(n: int):
    """Every perfect matching of ``[1, 2n]``, as sorted tuples of pairs."""

    def rec(rest):
        if not rest:
            yield ()
            return
        a = rest[0]
        for idx in range(1, len(rest)):
            b = rest[idx]
            remaining = rest[1:idx] + rest[idx + 1:]
            for tail in rec(remaining):
                yield ((a, b),) + tail

    yield from rec(tuple(range(1, 2 * n + 1)))


def long_pairs(M) -> int:
    return sum(1 for a, b in M if abs(a - b) > 1)


def matching_census(n: int) -> List[int]:
    counts = [0] * (n + 1)
    for M in matchings(n):
        counts[long_pairs(M)] += 1
    return counts


def insert_pair(X, p: int) -> Matching:
    """Relabel a matching on ``[1, 2n-2]`` around ``{1, p}`` and adjoin that pair."""
    n = len(X) + 1
    if not 2 <= p <= 2 * n:
        raise OutOfRange(f"p must lie in [2, {2 * n}]")

    def shift(x):
        return x + 1 if x < p - 1 else x + 2

    pairs = [tuple(sorted((shift(a), shift(b)))) for a, b in X]
    pairs.append((1, p))
    return tuple(sorted(pairs))


def f_to_h(f: List[int], d: int) -> List[int]:
    """h-vector of a ``(d-1)``-dimensional complex from ``f = (f_0, f_1, ...)``."""
    full = [1] + list(f)  # full[i] = f_{i-1}
    full += [0] * (d + 1 - len(full))
    return [sum((-1) ** (k - i) * comb(d - i, k - i) * full[i] for i in range(k + 1))
            for k in range(d + 1)]


def _trim(h: List[int], length: int) -> List[int]:
    if any(h[length:]):
        raise MethodDisagreement("h-vector has entries beyond the expected length", witness=h)
    return list(h[:length])


def h_vector(n: int, method: str = "recurrence") -> List[int]:
    """``h(n, 0..n-2)`` by one method."""
    if n < 2:
        raise OutOfRange("need n >= 2")
    if method == "recurrence":
        return [h_recurrence(n, k) for k in range(n - 1)]
    if method == "matchings":
        return _trim(matching_census(n - 2), n - 1)
    if method == "shelling":
        if n > SHELLING_LIMIT:
            raise ScaleLimit(f"shelling histogram supports n <= {SHELLING_LIMIT}")
        counts = [0] * (n - 1)
        for _, T in facets_with_trees(n):
            counts[len(shelling_set(T))] += 1
        return counts
    if method == "ftransform":
        if n > FTRANSFORM_LIMIT:
            raise ScaleLimit(f"f-vector transform supports n <= {FTRANSFORM_LIMIT}")
        return _trim(f_to_h(f_vector(n), 2 * n - 3), n - 1)
    raise ValueError(f"unknown method {method!r}")


def h_vector_checked(n: int, methods=None) -> List[int]:
    """Run several methods and insist they agree."""
    if methods is None:
        methods = [m for m in METHODS
                   if not (m == "shelling" and n > SHELLING_LIMIT)
                   and not (m == "ftransform" and n > FTRANSFORM_LIMIT)]
    results = {m: h_vector(n, m) for m in methods}
    values = list(results.values())
    if any(v != values[0] for v in values):
        raise MethodDisagreement(f"h-vector methods disagree at n={n}", witness=results)
    return values[0]


def hilbert_series(n: int) -> Tuple[List[int], int]:
    """``(numerator coefficients, denominator exponent)``."""
    return h_vector(n), 2 * n - 3


def hilbert_series_text(n: int) -> str:
    num, exp = hilbert_series(n)
    terms = []
    for k, c in enumerate(num):
        if not c:
            continue
        mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
        if k == 0:
            terms.append(str(c))
        else:
            terms.append(mono if c == 1 else f"{c}*{mono}")
    top = "+".join(terms)
    if len(terms) > 1:
        top = f"({top})"
    return f"{top}/(1-t)^{exp}"
