"""Subgraphs of complete graphs: edges, trees, blocks, coupled trees, wheels.

An edge is a pair ``(lo, hi)`` of positive integers with ``lo < hi``; an edge
set is a ``frozenset`` of such pairs.  The same edge set doubles as a
squarefree monomial in the edge variables (see :mod:`slopevar.polynomial`).
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import FrozenSet, Iterable, Tuple

from .errors import DisconnectedInput

Edge = Tuple[int, int]
EdgeSet = FrozenSet[Edge]


def edge(u: int, v: int) -> Edge:
    """Canonical form of the edge joining ``u`` and ``v``."""
    if u == v:
        raise ValueError(f"loop at vertex {u}")
    if min(u, v) < 1:
        raise ValueError("vertices are positive integers")
    return (u, v) if u < v else (v, u)


def edge_set(edges: Iterable) -> EdgeSet:
    """Build an edge set from pairs or from two-digit shorthand like ``13``."""
    out = set()
    for e in edges:
        if isinstance(e, int):
            e = divmod(e, 10)
        elif isinstance(e, str):
            e = (int(e[0]), int(e[1])) if len(e) == 2 else tuple(map(int, e.split(",")))
        out.add(edge(*e))
    return frozenset(out)


def complete_graph(vertices) -> EdgeSet:
    if isinstance(vertices, int):
        vertices = range(1, vertices + 1)
    return frozenset(combinations(sorted(vertices), 2))


def support(E: Iterable[Edge]) -> FrozenSet[int]:
    return frozenset(v for e in E for v in e)


def valence(E: Iterable[Edge], v: int) -> int:
    return sum(1 for e in E if v in e)


def sorted_edges(E: Iterable[Edge]) -> list:
    return sorted(E)


def path_edges(vertices) -> EdgeSet:
    """Edge set of the path visiting ``vertices`` in order."""
    return frozenset(edge(a, b) for a, b in zip(vertices, vertices[1:]))


def adjacency(E: Iterable[Edge]) -> dict:
    adj = defaultdict(set)
    for u, v in E:
        adj[u].add(v)
        adj[v].add(u)
    return adj


class _UnionFind:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        parent = self.parent
        parent.setdefault(x, x)
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a, b) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        return True


def components(E: Iterable[Edge]) -> list:
    """Partition ``E`` into the edge sets of its connected components.

    Components are listed in order of their smallest edge.
    """
    E = list(E)
    uf = _UnionFind()
    for u, v in E:
        uf.union(u, v)
    groups = defaultdict(set)
    for e in E:
        groups[uf.find(e[0])].add(e)
    return sorted((frozenset(g) for g in groups.values()), key=min)


def is_connected(E: Iterable[Edge]) -> bool:
    return len(components(E)) <= 1


def is_acyclic(E: Iterable[Edge]) -> bool:
    uf = _UnionFind()
    return all(uf.union(u, v) for u, v in E)


def is_tree(E: Iterable[Edge]) -> bool:
    E = list(E)
    if not E:
        return False
    return len(E) == len(support(E)) - 1 and is_acyclic(E)


def is_spanning_tree(T: Iterable[Edge], vertices) -> bool:
    T = frozenset(T)
    return support(T) == frozenset(vertices) and is_tree(T)


def spanning_trees(E: Iterable[Edge]) -> list:
    """All spanning trees of the graph ``(V(E), E)``, sorted.

    Exhaustive over edge subsets of size ``|V| - 1``; meant for ``|V| <= 9``.
    """
    E = sorted(E)
    V = support(E)
    if not E:
        return []
    out = []
    for T in combinations(E, len(V) - 1):
        if is_acyclic(T):
            out.append(frozenset(T))
    return out


def coupled_trees(E: Iterable[Edge]) -> list:
    """Spanning trees ``T`` of ``E`` whose complement is also a spanning tree."""
    E = frozenset(E)
    V = support(E)
    if not E or len(E) != 2 * (len(V) - 1):
        return []
    out = []
    for T in combinations(sorted(E), len(V) - 1):
        if not is_acyclic(T):
            continue
        rest = E.difference(T)
        if support(rest) == V and is_acyclic(rest):
            out.append(frozenset(T))
    return out


def is_pseudocircuit(E: Iterable[Edge]) -> bool:
    """True if ``E`` is a disjoint union of two spanning trees of ``V(E)``."""
    E = frozenset(E)
    V = support(E)
    if not E or len(E) != 2 * (len(V) - 1):
        return False
    for T in combinations(sorted(E), len(V) - 1):
        if is_acyclic(T):
            rest = E.difference(T)
            if support(rest) == V and is_acyclic(rest):
                return True
    return False


def is_rigidity_circuit(E: Iterable[Edge]) -> bool:
    """Exhaustive check: a pseudocircuit with no proper pseudocircuit inside.

    Exponential in ``|E|``.  Only wheels are needed elsewhere in the package;
    this is a slow reference check for small graphs.
    """
    E = frozenset(E)
    if not is_pseudocircuit(E):
        return False
    edges = sorted(E)
    V = sorted(support(E))
    for r in range(2, len(V)):
        for U in combinations(V, r):
            U = set(U)
            inside = [e for e in edges if e[0] in U and e[1] in U]
            need = 2 * (r - 1)
            if len(inside) < need:
                continue
            for sub in combinations(inside, need):
                if support(sub) == U and is_pseudocircuit(sub):
                    return False
    return True


def blocks_and_cut_vertices(E: Iterable[Edge]):
    """Block decomposition of a connected graph.

    Returns ``(blocks, cut_vertices)``: a sorted list of edge sets (every edge
    lies in exactly one block) and the set of vertices lying in two or more
    blocks.  A single edge is a block (``K_2`` counts as 2-connected).
    """
    E = frozenset(E)
    if not E:
        return [], frozenset()
    if not is_connected(E):
        raise DisconnectedInput("block decomposition needs a connected edge set")
    adj = {v: sorted(ns) for v, ns in adjacency(E).items()}
    disc, low = {}, {}
    edge_stack, blocks = [], []
    counter = 0
    root = min(adj)
    # iterative Hopcroft-Tarjan
    disc[root] = low[root] = counter
    stack = [(root, None, iter(adj[root]))]
    while stack:
        v, parent, it = stack[-1]
        advanced = False
        for w in it:
            if w == parent:
                continue
            if w not in disc:
                counter += 1
                disc[w] = low[w] = counter
                edge_stack.append(edge(v, w))
                stack.append((w, v, iter(adj[w])))
                advanced = True
                break
            if disc[w] < disc[v]:
                edge_stack.append(edge(v, w))
                low[v] = min(low[v], disc[w])
        if advanced:
            continue
        stack.pop()
        if parent is not None:
            low[parent] = min(low[parent], low[v])
            if low[v] >= disc[parent]:
                block = set()
                target = edge(parent, v)
                while True:
                    e = edge_stack.pop()
                    block.add(e)
                    if e == target:
                        break
                blocks.append(frozenset(block))
    count = defaultdict(int)
    for b in blocks:
        for v in support(b):
            count[v] += 1
    cuts = frozenset(v for v, c in count.items() if c >= 2)
    return sorted(blocks, key=min), cuts


def cut_vertices(E: Iterable[Edge]) -> FrozenSet[int]:
    return blocks_and_cut_vertices(E)[1]


def lobes(E: Iterable[Edge], v: int) -> list:
    """The ``v``-lobes of a connected graph: one per component of ``G - v``.

    Each lobe includes the edges joining that component to ``v``.
    """
    E = frozenset(E)
    rest = [e for e in E if v not in e]
    uf = _UnionFind()
    for a in support(E):
        if a != v:
            uf.find(a)
    for a, b in rest:
        uf.union(a, b)
    groups = defaultdict(set)
    for e in E:
        other = e[1] if e[0] == v else e[0]
        groups[uf.find(other)].add(e)
    return sorted((frozenset(g) for g in groups.values()), key=min)


@dataclass(frozen=True)
class Wheel:
    """The wheel with the given center and spokes in cyclic order."""

    center: int
    spokes: Tuple[int, ...]

    def __post_init__(self):
        spokes = tuple(self.spokes)
        object.__setattr__(self, "spokes", spokes)
        if len(spokes) < 3:
            raise ValueError("a wheel needs at least three spokes")
        if len(set(spokes)) != len(spokes) or self.center in spokes:
            raise ValueError("wheel vertices must be distinct")
        if min(spokes + (self.center,)) < 1:
            raise ValueError("vertices are positive integers")

    @property
    def k(self) -> int:
        return len(self.spokes)

    def spoke(self, i: int) -> int:
        """Spoke ``v_i`` for any integer ``i``, indices taken mod ``k`` in ``[1, k]``."""
        return self.spokes[(i - 1) % self.k]

    def chord(self, i: int) -> Edge:
        """The chord ``v_i v_{i+1}``."""
        return edge(self.spoke(i), self.spoke(i + 1))

    def radius(self, i: int) -> Edge:
        """The radius ``v_0 v_i``."""
        return edge(self.center, self.spoke(i))

    @property
    def chords(self) -> EdgeSet:
        return frozenset(self.chord(i) for i in range(1, self.k + 1))

    @property
    def radii(self) -> EdgeSet:
        return frozenset(self.radius(i) for i in range(1, self.k + 1))

    @property
    def edges(self) -> EdgeSet:
        return self.chords | self.radii

    @property
    def vertices(self) -> FrozenSet[int]:
        return frozenset(self.spokes) | {self.center}

    def relabeled(self, spokes) -> "Wheel":
        """Same wheel with the spoke cycle rotated or reflected to ``spokes``."""
        w = Wheel(self.center, tuple(spokes))
        if w.edges != self.edges:
            raise ValueError("not a relabeling of the same wheel")
        return w

    def __str__(self):
        return f"{self.center};" + ",".join(map(str, self.spokes))

    @classmethod
    def parse(cls, text: str) -> "Wheel":
        """Parse the ``"c;s1,s2,...,sk"`` form."""
        try:
            center, rest = text.split(";")
            return cls(int(center), tuple(int(s) for s in rest.split(",")))
        except ValueError as exc:
            raise ValueError(f"bad wheel spec {text!r}: expected 'c;s1,...,sk'") from exc


def _cycles(vertices):
    """Cyclic orders of ``vertices`` up to rotation and reflection."""
    first, *rest = sorted(vertices)
    for perm in permutations(rest):
        if perm[0] < perm[-1]:
            yield (first,) + perm


def wheels_in_complete_graph(n: int, dedupe: bool = True) -> list:
    """All wheel subgraphs of ``K_n``.

    With ``dedupe`` one wheel is kept per edge set; a 3-wheel is a ``K_4``
    whose four center choices give the same edge set, and the smallest center
    is retained.
    """
    if n < 4:
        return []
    seen = set()
    out = []
    for size in range(4, n + 1):
        for V in combinations(range(1, n + 1), size):
            for center in V:
                others = [v for v in V if v != center]
                for cyc in _cycles(others):
                    w = Wheel(center, cyc)
                    if dedupe:
                        if w.edges in seen:
                            continue
                        seen.add(w.edges)
                    out.append(w)
    return out


def format_edge_list(E: Iterable[Edge]) -> str:
    """Edge-list text: one ``"i j"`` line per edge, sorted."""
    return "".join(f"{u} {v}\n" for u, v in sorted(E))


def parse_edge_list(text: str) -> EdgeSet:
    out = set()
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line {raw!r}")
        out.add(edge(int(parts[0]), int(parts[1])))
    return frozenset(out)
