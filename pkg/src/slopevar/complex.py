"""Forbidden paths and the simplicial complex of edge sets avoiding them.

A path ``v1 ... vk`` is forbidden when ``k >= 4``, ``v1`` is its largest
vertex, ``vk`` is the largest of the rest, and ``v2 > v_{k-1}``.  The edge
sets containing no forbidden path form a pure complex; its facets are
encoded by admissible binary trees of vertex sets.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterable, Optional, Tuple

from .errors import DisconnectedInput, NotAFacet, ScaleLimit
from .graph import (Edge, EdgeSet, adjacency, blocks_and_cut_vertices,
                    complete_graph, edge, lobes, path_edges, support)
from .polynomial import GLEX, GREVLEX
from .trees import SetTree

DecompositionTree = SetTree

PathSeq = Tuple[int, ...]


def _orient(p) -> PathSeq:
    p = tuple(p)
    return p if p[0] >= p[-1] else p[::-1]


def is_forbidden(p: Iterable[int], kind: str = GLEX) -> bool:
    """True if the path ``p`` (read in either direction) is forbidden.

    ``kind="grevlex"`` uses the mirrored last condition ``v2 < v_{k-1}``.
    """
    p = tuple(p)
    if len(p) < 4:
        return False
    if len(set(p)) != len(p):
        raise ValueError("path vertices must be distinct")
    p = _orient(p)
    if p[0] != max(p) or p[-1] != max(p[1:]):
        return False
    if kind == GLEX:
        return p[1] > p[-2]
    if kind == GREVLEX:
        return p[1] < p[-2]
    raise ValueError(f"unknown order kind {kind!r}")


def contains_forbidden_path(E: Iterable[Edge], kind: str = GLEX) -> Optional[PathSeq]:
    """Some forbidden path inside ``E``, oriented from its largest vertex, or ``None``."""
    E = frozenset(E)
    if len(E) < 3:
        return None
    adj = {v: sorted(ns) for v, ns in adjacency(E).items()}
    for top in sorted(adj, reverse=True):
        # extend paths from ``top`` through smaller vertices only
        stack = [(top,)]
        while stack:
            path = stack.pop()
            if len(path) >= 4 and is_forbidden(path, kind):
                return path
            last = path[-1]
            for w in adj[last]:
                if w < top and w not in path:
                    stack.append(path + (w,))
    return None


def is_face(E: Iterable[Edge], kind: str = GLEX) -> bool:
    return contains_forbidden_path(E, kind) is None


def _vertex_tuple(V) -> Tuple[int, ...]:
    if isinstance(V, int):
        V = range(1, V + 1)
    return tuple(sorted(set(V)))


# -- admissible trees ------------------------------------------------------------

@lru_cache(maxsize=None)
def _admissible(V: Tuple[int, ...]) -> tuple:
    if len(V) < 2:
        raise ValueError("need at least two vertices")
    if len(V) == 2:
        return (SetTree(V),)
    lo = V[0]
    middle = V[1:-1]
    out = []
    for r in range(1, len(middle) + 1):
        for extra in combinations(middle, r):
            X1 = (lo,) + extra
            m = X1[-1]
            X2 = tuple(sorted(set(V) - set(X1) | {m}))
            for left in _admissible(X1):
                for right in _admissible(X2):
                    out.append(SetTree(V, left, right))
    return tuple(out)


def admissible_trees(V) -> list:
    """All admissible decomposition trees with root ``V``."""
    return list(_admissible(_vertex_tuple(V)))


def is_admissible(tree: SetTree) -> bool:
    for t in tree.preorder():
        X = t.labelset
        if t.is_leaf:
            if len(X) != 2:
                return False
            continue
        if len(X) < 3:
            return False
        X1, X2 = t.older.labelset, t.younger.labelset
        if X1 | X2 != X or X1 & X2 != {max(X1)}:
            return False
        if min(X) not in X1 - X2 or max(X) not in X2 - X1:
            return False
    return True


def edg(label) -> Edge:
    return edge(min(label), max(label))


def edg_expand(tree: SetTree) -> EdgeSet:
    """The facet encoded by a decomposition tree: ``{min X, max X}`` for every node."""
    return frozenset(edg(t.label) for t in tree.preorder())


def facet_key(F) -> tuple:
    return tuple(sorted(F))


def facets(V) -> list:
    """All facets on vertex set ``V`` via admissible trees, sorted by edge list."""
    return sorted((edg_expand(t) for t in admissible_trees(V)), key=facet_key)


def facets_with_trees(V) -> list:
    """``(facet, tree)`` pairs, sorted by facet."""
    return sorted(((edg_expand(t), t) for t in admissible_trees(V)),
                  key=lambda p: facet_key(p[0]))


# -- exhaustive oracle -------------------------------------------------------------

BRUTE_FORCE_LIMIT = 6


def all_faces(n: int, kind: str = GLEX) -> list:
    """Every nonempty face, by depth-first extension over the edges of ``K_n``."""
    if n > BRUTE_FORCE_LIMIT:
        raise ScaleLimit(f"exhaustive face scan supports n <= {BRUTE_FORCE_LIMIT}")
    edges = sorted(complete_graph(n))
    out = []

    def grow(current, start):
        for idx in range(start, len(edges)):
            nxt = current | {edges[idx]}
            if is_face(nxt, kind):
                out.append(nxt)
                grow(nxt, idx + 1)

    grow(frozenset(), 0)
    return out


def facets_bruteforce(n: int, kind: str = GLEX) -> list:
    faces = all_faces(n, kind)
    face_set = set(faces)
    edges = complete_graph(n)
    out = [F for F in faces if all((F | {e}) not in face_set for e in edges - F)]
    if n == 1:
        return [frozenset()]
    return sorted(out, key=facet_key)


def f_vector(n: int) -> list:
    """``f[i]`` = number of faces with ``i + 1`` edges."""
    if n > BRUTE_FORCE_LIMIT:
        raise ScaleLimit(f"f_vector supports n <= {BRUTE_FORCE_LIMIT}")
    counts = {}
    for F in all_faces(n):
        counts[len(F)] = counts.get(len(F), 0) + 1
    top = max(counts, default=0)
    return [counts.get(i + 1, 0) for i in range(top)]


# -- decomposition -------------------------------------------------------------------

def _decompose(F: EdgeSet) -> SetTree:
    V = tuple(sorted(support(F)))
    if len(F) != 2 * len(V) - 3:
        raise NotAFacet(f"{len(F)} edges on {len(V)} vertices, expected {2 * len(V) - 3}")
    if len(V) == 2:
        return SetTree(V)
    lo, hi = V[0], V[-1]
    if (lo, hi) not in F:
        raise NotAFacet(f"missing edge {lo}{hi}")
    rest = F - {(lo, hi)}
    try:
        blocks, cuts = blocks_and_cut_vertices(rest)
    except DisconnectedInput as exc:
        raise NotAFacet("removing {min, max} disconnects the edge set") from exc
    if lo in cuts:
        raise NotAFacet("the minimum vertex is a cut vertex")
    home = next(b for b in blocks if lo in support(b))
    candidates = support(home) & cuts
    if len(candidates) != 1:
        raise NotAFacet("no unique cut vertex next to the minimum")
    (a,) = candidates
    F1 = next(L for L in lobes(rest, a) if lo in support(L))
    F2 = rest - F1
    if support(F1) & support(F2) != {a} or max(support(F1)) != a:
        raise NotAFacet("lobes do not split at the largest vertex of the first lobe")
    return SetTree(V, _decompose(F1), _decompose(F2))


def decomposition_tree(F: Iterable[Edge], check: bool = True) -> SetTree:
    """The admissible tree of a facet; raises :class:`NotAFacet` otherwise."""
    F = frozenset(F)
    if not F:
        raise NotAFacet("empty edge set")
    if check:
        bad = contains_forbidden_path(F)
        if bad is not None:
            raise NotAFacet(f"contains forbidden path {''.join(map(str, bad))}")
    return _decompose(F)


# -- minimal forbidden paths -------------------------------------------------------------

def _has_forbidden_subpath(p: PathSeq, kind: str) -> bool:
    n = len(p)
    for length in range(4, n):
        for start in range(0, n - length + 1):
            if is_forbidden(p[start:start + length], kind):
                return True
    return False


def minimal_forbidden_paths(n: int, kind: str = GLEX) -> list:
    """Forbidden paths through all of ``[1, n]`` with no forbidden proper subpath."""
    if n < 4:
        return []
    out = []
    for rest in permutations(range(1, n)):
        p = (n,) + rest
        if is_forbidden(p, kind) and not _has_forbidden_subpath(p, kind):
            out.append(p)
    return sorted(out)


def minimal_forbidden_edge_sets(n: int, kind: str = GLEX) -> set:
    """Edge sets of minimal forbidden paths on every vertex subset of ``[1, n]``."""
    out = set()
    for size in range(4, n + 1):
        shapes = minimal_forbidden_paths(size, kind)
        for U in combinations(range(1, n + 1), size):
            relabel = dict(zip(range(1, size + 1), U))
            for p in shapes:
                out.add(path_edges([relabel[v] for v in p]))
    return out


def path_text(p: PathSeq) -> str:
    sep = "," if max(p) >= 10 else ""
    return sep.join(map(str, p))


def facet_count_formula(n: int) -> int:
    """``(2n-4)! / (2^(n-2) (n-2)!)``, i.e. ``(2n-5)!!``."""
    out = 1
    for odd in range(2 * n - 5, 0, -2):
        out *= odd
    return out
