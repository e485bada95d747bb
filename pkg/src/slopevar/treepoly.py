"""Tree polynomials of rigidity circuits and leading trees of wheels."""

from __future__ import annotations

from itertools import product
from typing import Dict, Optional, Sequence, Tuple

from .errors import ConstantValence, NotPseudocircuit, NotSpanningTree
from .graph import (Edge, EdgeSet, Wheel, adjacency, coupled_trees, edge,
                    is_acyclic, is_pseudocircuit, is_spanning_tree, support)
from .polynomial import (GLEX, Polynomial, TermOrder, determinant,
                         mono_from_edges)

CENTER_MIN = "center-min"
CENTER_MAX = "center-max"
CRITICAL_EDGE = "critical-edge"
REVLEX_SEARCH = "revlex-search"


def _tree_path(T, a: int, b: int) -> list:
    """Vertex sequence of the unique path from ``a`` to ``b`` in the tree ``T``."""
    adj = adjacency(T)
    prev = {a: None}
    stack = [a]
    while stack:
        v = stack.pop()
        if v == b:
            break
        for w in adj[v]:
            if w not in prev:
                prev[w] = v
                stack.append(w)
    path = [b]
    while path[-1] != a:
        path.append(prev[path[-1]])
    return path[::-1]


def _dfs_tree(E) -> EdgeSet:
    adj = {v: sorted(ns) for v, ns in adjacency(E).items()}
    root = min(adj)
    seen = {root}
    out = set()
    stack = [root]
    while stack:
        v = stack.pop()
        for w in reversed(adj[v]):
            if w not in seen:
                seen.add(w)
                out.add(edge(v, w))
                stack.append(w)
    return frozenset(out)


def tree_matrix(C, T) -> Tuple[list, list, list]:
    """The square matrix whose determinant is the tree polynomial.

    Returns ``(rows, cols, matrix)`` with rows indexed by the edges of ``C - T``
    and columns by the edges of ``T``, both in sorted order.
    """
    C = frozenset(C)
    T = frozenset(T)
    rows = sorted(C - T)
    cols = sorted(T)
    index = {f: c for c, f in enumerate(cols)}
    matrix = [[Polynomial() for _ in cols] for _ in rows]
    for r, e in enumerate(rows):
        v, w = e  # oriented v -> w with v < w, cycle closes w -> ... -> v in T
        me = Polynomial.var(*e)
        walk = _tree_path(T, w, v)
        for a, b in zip(walk, walk[1:]):
            f = edge(a, b)
            mf = Polynomial.var(*f)
            matrix[r][index[f]] = me - mf if a < b else mf - me
    return rows, cols, matrix


def tree_polynomial(C, T=None) -> Polynomial:
    """Determinant form of the tree polynomial of the pseudocircuit ``C``.

    ``T`` is any spanning tree of ``C``; it defaults to the radii when ``C``
    is a :class:`Wheel`, otherwise to a depth-first tree.  The sign is the raw
    determinant sign; use :func:`slopevar.polynomial.normalize_sign` to compare.
    """
    if isinstance(C, Wheel):
        if T is None:
            T = C.radii
        C = C.edges
    C = frozenset(C)
    if not is_pseudocircuit(C):
        raise NotPseudocircuit("edge set is not a union of two disjoint spanning trees")
    if T is None:
        T = _dfs_tree(C)
    T = frozenset(T)
    if not T <= C or not is_spanning_tree(T, support(C)):
        raise NotSpanningTree("T must be a spanning tree contained in C")
    _, _, matrix = tree_matrix(C, T)
    return determinant(matrix)


def wheel_polynomial(W: Wheel) -> Polynomial:
    """Closed form: prod(m_{0,i} - m_{i,i+1}) - prod(m_{0,i+1} - m_{i,i+1})."""
    first = Polynomial.constant(1)
    second = Polynomial.constant(1)
    for i in range(1, W.k + 1):
        chord = Polynomial.var(*W.chord(i))
        first = first * (Polynomial.var(*W.radius(i)) - chord)
        second = second * (Polynomial.var(*W.radius(i + 1)) - chord)
    return first - second


def valence_on_spokes(W: Wheel, T) -> Tuple[int, ...]:
    T = frozenset(T)
    return tuple(sum(1 for e in T if v in e) for v in W.spokes)


def _check_valence(W: Wheel, d: Sequence[int]) -> Tuple[int, ...]:
    d = tuple(d)
    if len(d) != W.k or any(x not in (1, 2) for x in d):
        raise ValueError("valence function must map each spoke to 1 or 2")
    if len(set(d)) == 1:
        raise ConstantValence("valence function is constant")
    return d


def edge_types(W: Wheel, d: Sequence[int]) -> Dict[Edge, Tuple[int, int]]:
    """Type of every wheel edge: chord v_i v_{i+1} -> (d(i), d(i+1)),
    radius v_0 v_i -> (d(i-1), d(i+1)).  Types are reported sorted, so 21 reads as 12."""
    d = _check_valence(W, d)
    k = W.k

    def val(i):
        return d[(i - 1) % k]

    out = {}
    for i in range(1, k + 1):
        out[W.chord(i)] = tuple(sorted((val(i), val(i + 1))))
        out[W.radius(i)] = tuple(sorted((val(i - 1), val(i + 1))))
    return out


def _tree_from_chords(W: Wheel, d, chords_in) -> Optional[EdgeSet]:
    k = W.k
    T = set(chords_in)
    for i in range(1, k + 1):
        c = (W.chord(i - 1) in T) + (W.chord(i) in T)
        need = d[i - 1] - c
        if need == 1:
            T.add(W.radius(i))
        elif need != 0:
            return None
    T = frozenset(T)
    if len(T) != k or not is_acyclic(T):
        return None
    rest = W.edges - T
    if not is_acyclic(rest) or support(T) != W.vertices or support(rest) != W.vertices:
        return None
    return T


def coupled_trees_by_valence(W: Wheel, d: Sequence[int]) -> Tuple[EdgeSet, EdgeSet]:
    """The two coupled trees whose valence on spoke ``v_i`` is ``d[i-1]``.

    Type-22 chords go in, type-11 chords stay out, and the type-12 chords
    alternate around the rim; each radius is then forced by the valence.
    """
    d = _check_valence(W, d)
    types = edge_types(W, d)
    chords = [W.chord(i) for i in range(1, W.k + 1)]
    forced = [c for c in chords if types[c] == (2, 2)]
    mixed = [c for c in chords if types[c] == (1, 2)]
    trees = []
    for parity in (0, 1):
        picked = forced + [c for t, c in enumerate(mixed) if t % 2 == parity]
        T = _tree_from_chords(W, d, picked)
        if T is None:
            raise AssertionError(f"alternation failed for {W} with valence {d}")
        trees.append(T)
    return tuple(sorted(trees, key=sorted))


def nonconstant_valences(k: int):
    for d in product((1, 2), repeat=k):
        if len(set(d)) > 1:
            yield d


def all_coupled_trees(W: Wheel) -> list:
    """Every coupled tree of ``W``, built valence by valence."""
    out = []
    for d in nonconstant_valences(W.k):
        out.extend(coupled_trees_by_valence(W, d))
    return sorted(out, key=sorted)


def _max_tree(trees, order: TermOrder):
    best = None
    for T in trees:
        if best is None or order.edge_set_compare(T, best) > 0:
            best = T
    return best


def _relabel_center_min(W: Wheel) -> Wheel:
    s = list(W.spokes)
    top = s.index(max(s))
    s = s[top:] + s[:top]
    if s[1] < s[-1]:
        s = [s[0]] + s[1:][::-1]
    return W.relabeled(s)


def _relabel_center_max(W: Wheel) -> Wheel:
    # least chord in the edge order == lexicographically largest pair
    a, b = max(W.chords)
    s = list(W.spokes)
    top = s.index(b)  # b > a, so b is v1 and a is v2
    s = s[top:] + s[:top]
    if s[1] != a:
        s = [s[0]] + s[1:][::-1]
    return W.relabeled(s)


def leading_tree_with_case(W: Wheel, order: Optional[TermOrder] = None):
    """``(tree, case)`` where ``tree`` carries the leading monomial of the wheel polynomial."""
    order = order or TermOrder()
    if order.kind != GLEX:
        return _max_tree(all_coupled_trees(W), order), REVLEX_SEARCH
    V = W.vertices
    v0 = W.center
    if v0 == min(V):
        R = _relabel_center_min(W)
        T = (R.radii - {R.radius(1)}) | {R.chord(R.k)}
        return T, CENTER_MIN
    if v0 == max(V):
        R = _relabel_center_max(W)
        T = (R.chords - {R.chord(1)}) | {R.radius(2)}
        return T, CENTER_MAX
    d = tuple(1 if v > v0 else 2 for v in W.spokes)
    T1, T2 = coupled_trees_by_valence(W, d)
    critical = min(T1 ^ T2)  # greatest edge in the variable order
    return (T1 if critical in T1 else T2), CRITICAL_EDGE


def leading_tree(W: Wheel, order: Optional[TermOrder] = None) -> EdgeSet:
    return leading_tree_with_case(W, order)[0]


def critical_edge(W: Wheel) -> Edge:
    """Greatest edge separating the two valence-compatible trees (middle center only)."""
    v0 = W.center
    if v0 in (min(W.vertices), max(W.vertices)):
        raise ValueError("critical edge is defined only when the center is neither min nor max")
    d = tuple(1 if v > v0 else 2 for v in W.spokes)
    T1, T2 = coupled_trees_by_valence(W, d)
    return min(T1 ^ T2)


def leading_monomial(W: Wheel, order: Optional[TermOrder] = None):
    return mono_from_edges(leading_tree(W, order))


__all__ = [
    "tree_polynomial", "tree_matrix", "wheel_polynomial", "edge_types",
    "coupled_trees_by_valence", "all_coupled_trees", "leading_tree",
    "leading_tree_with_case", "critical_edge", "coupled_trees",
    "nonconstant_valences", "valence_on_spokes", "CENTER_MIN", "CENTER_MAX", "CRITICAL_EDGE",
    "REVLEX_SEARCH",
]
