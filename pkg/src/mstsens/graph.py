"""Weighted graphs, DIMACS-like I/O, MST solvers, Dijkstra and generators.

Vertices are 0-based in memory and 1-based in files. Edge ids are
positions in the edge arrays. Weight ties are broken by edge id, so every
comparison of edges is on the pair (weight, id) and the MST is unique.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable

import numpy as np


class GraphError(ValueError):
    """Malformed input or a graph violating an operation's precondition."""


@dataclass(frozen=True, eq=False)
class WeightedGraph:
    n: int
    u: np.ndarray
    v: np.ndarray
    w: np.ndarray

    def __post_init__(self):
        u = np.ascontiguousarray(self.u, dtype=np.int64)
        v = np.ascontiguousarray(self.v, dtype=np.int64)
        w = np.ascontiguousarray(self.w)
        if not (len(u) == len(v) == len(w)):
            raise GraphError("edge arrays differ in length")
        if self.n < 1:
            raise GraphError("graph needs at least one vertex")
        if len(u) and (min(u.min(), v.min()) < 0 or max(u.max(), v.max()) >= self.n):
            raise GraphError("edge endpoint out of range")
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "w", w)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple]) -> "WeightedGraph":
        edges = list(edges)
        if not edges:
            return cls(n, np.empty(0, np.int64), np.empty(0, np.int64), np.empty(0, np.int64))
        u, v, w = zip(*edges)
        return cls(n, np.array(u), np.array(v), np.array(w))

    @property
    def m(self) -> int:
        return len(self.u)

    def edges(self):
        """(u, v, w, id) tuples in id order."""
        return zip(self.u.tolist(), self.v.tolist(), self.w.tolist(), range(self.m))

    @cached_property
    def rank(self) -> np.ndarray:
        """rank[id] = position of the edge in (weight, id) order."""
        order = np.lexsort((np.arange(self.m), self.w))
        rank = np.empty(self.m, dtype=np.int64)
        rank[order] = np.arange(self.m)
        return rank

    @cached_property
    def by_rank(self) -> np.ndarray:
        """Inverse of :attr:`rank`."""
        return np.lexsort((np.arange(self.m), self.w))

    def with_weight(self, e: int, new_w) -> "WeightedGraph":
        if not 0 <= e < self.m:
            raise GraphError(f"edge id {e} out of range")
        w = self.w.astype(np.result_type(self.w, np.asarray(new_w)), copy=True)
        w[e] = new_w
        return WeightedGraph(self.n, self.u, self.v, w)

    def is_connected(self) -> bool:
        return _components(self.n, self.u, self.v) == 1

    def __eq__(self, other):
        if not isinstance(other, WeightedGraph):
            return NotImplemented
        return (self.n == other.n and np.array_equal(self.u, other.u)
                and np.array_equal(self.v, other.v) and np.array_equal(self.w, other.w))

    __hash__ = None


@dataclass(frozen=True, eq=False)
class SpanningTree:
    """Tree edge ids (sorted) plus a membership mask over all edge ids."""

    edge_ids: np.ndarray
    in_tree: np.ndarray = field(repr=False)

    @classmethod
    def from_ids(cls, g: WeightedGraph, ids) -> "SpanningTree":
        ids = np.unique(np.asarray(ids, dtype=np.int64))
        mask = np.zeros(g.m, dtype=bool)
        mask[ids] = True
        return cls(ids, mask)

    def __len__(self):
        return len(self.edge_ids)

    def __eq__(self, other):
        return isinstance(other, SpanningTree) and np.array_equal(self.edge_ids, other.edge_ids)

    __hash__ = None

    def nontree_ids(self) -> np.ndarray:
        return np.flatnonzero(~self.in_tree)


@dataclass(frozen=True, eq=False)
class ShortestPathTree:
    source: int
    parent: np.ndarray        # parent vertex, -1 at the source
    parent_edge: np.ndarray   # tree edge id to the parent, -1 at the source
    dist: np.ndarray

    def as_spanning_tree(self, g: WeightedGraph) -> SpanningTree:
        return SpanningTree.from_ids(g, self.parent_edge[self.parent_edge >= 0])


def _components(n, u, v) -> int:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    comps = n
    for a, b in zip(u.tolist(), v.tolist()):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
            comps -= 1
    return comps


# input / output

def normalize(g: WeightedGraph) -> WeightedGraph:
    """Drop self-loops and keep only the lightest of each parallel class.

    Surviving edges keep their relative order and are renumbered densely.
    """
    a = np.minimum(g.u, g.v)
    b = np.maximum(g.u, g.v)
    keep = a != b
    ids = np.flatnonzero(keep)
    if len(ids):
        order = np.lexsort((ids, g.w[ids], b[ids], a[ids]))
        sa, sb = a[ids][order], b[ids][order]
        first = np.ones(len(order), dtype=bool)
        first[1:] = (sa[1:] != sa[:-1]) | (sb[1:] != sb[:-1])
        ids = np.sort(ids[order[first]])
    return WeightedGraph(g.n, g.u[ids], g.v[ids], g.w[ids])


def parse_graph(text, *, positive: bool = False, require_connected: bool = True) -> WeightedGraph:
    """Parse the DIMACS-like format::

        c optional comment
        p edge <n> <m>
        e <u> <v> <w>

    Vertices are 1-based, weights integers. The result is normalised.
    With ``positive=True`` (shortest-path mode) weights must be > 0.
    """
    if isinstance(text, bytes):
        text = text.decode()
    if not isinstance(text, str):
        text = text.read()
        if isinstance(text, bytes):
            text = text.decode()
    n = declared_m = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        tag = parts[0]
        if tag == "p":
            if n is not None:
                raise GraphError(f"line {lineno}: duplicate header")
            if len(parts) != 4 or parts[1] != "edge":
                raise GraphError(f"line {lineno}: expected 'p edge <n> <m>'")
            try:
                n, declared_m = int(parts[2]), int(parts[3])
            except ValueError:
                raise GraphError(f"line {lineno}: non-integer header field") from None
            if n < 1 or declared_m < 0:
                raise GraphError(f"line {lineno}: bad header sizes")
        elif tag == "e":
            if n is None:
                raise GraphError(f"line {lineno}: edge before header")
            if len(parts) != 4:
                raise GraphError(f"line {lineno}: expected 'e <u> <v> <w>'")
            try:
                a, b, w = int(parts[1]), int(parts[2]), int(parts[3])
            except ValueError:
                raise GraphError(f"line {lineno}: non-integer edge field") from None
            if not (1 <= a <= n and 1 <= b <= n):
                raise GraphError(f"line {lineno}: vertex out of range 1..{n}")
            if positive and w <= 0:
                raise GraphError(f"line {lineno}: nonpositive weight {w}")
            edges.append((a - 1, b - 1, w))
        else:
            raise GraphError(f"line {lineno}: unknown line type {tag!r}")
    if n is None:
        raise GraphError("missing 'p edge' header")
    if len(edges) != declared_m:
        raise GraphError(f"header declares {declared_m} edges, found {len(edges)}")
    g = normalize(WeightedGraph.from_edges(n, edges))
    if require_connected and not g.is_connected():
        raise GraphError("graph is disconnected")
    return g


def serialize_graph(g: WeightedGraph) -> str:
    lines = [f"p edge {g.n} {g.m}"]
    lines += [f"e {a + 1} {b + 1} {w}" for a, b, w, _ in g.edges()]
    return "\n".join(lines) + "\n"


# minimum spanning trees

MSTSolver = Callable[[WeightedGraph], SpanningTree]


def kruskal(g: WeightedGraph) -> SpanningTree:
    """Sort by (weight, id) and grow a forest with union-find."""
    parent = list(range(g.n))
    u, v = g.u.tolist(), g.v.tolist()
    chosen = []
    need = g.n - 1
    for e in g.by_rank.tolist():
        if len(chosen) == need:
            break
        a, b = u[e], v[e]
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        while parent[b] != b:
            parent[b] = parent[parent[b]]
            b = parent[b]
        if a != b:
            parent[a] = b
            chosen.append(e)
    if len(chosen) != need:
        raise GraphError("graph is disconnected")
    return SpanningTree.from_ids(g, chosen)


def prim(g: WeightedGraph) -> SpanningTree:
    """Heap-based Prim keyed on edge rank; an independent second solver."""
    adj = [[] for _ in range(g.n)]
    rank = g.rank.tolist()
    for a, b, _, e in g.edges():
        adj[a].append((rank[e], e, b))
        adj[b].append((rank[e], e, a))
    seen = [False] * g.n
    seen[0] = True
    heap = list(adj[0])
    heapq.heapify(heap)
    chosen = []
    while heap:
        _, e, x = heapq.heappop(heap)
        if seen[x]:
            continue
        seen[x] = True
        chosen.append(e)
        for item in adj[x]:
            if not seen[item[2]]:
                heapq.heappush(heap, item)
    if len(chosen) != g.n - 1:
        raise GraphError("graph is disconnected")
    return SpanningTree.from_ids(g, chosen)


def mst(g: WeightedGraph, solver: MSTSolver | None = None) -> SpanningTree:
    """The unique minimum spanning tree under (weight, id) order."""
    return (solver or kruskal)(g)


# shortest paths

def sssp(g: WeightedGraph, s: int) -> ShortestPathTree:
    """Dijkstra from ``s``. Each vertex takes, among the tight edges into
    it, the one with the smallest id as its tree edge."""
    if not 0 <= s < g.n:
        raise GraphError(f"source {s} out of range")
    if g.m and (g.w <= 0).any():
        raise GraphError("shortest paths need positive weights")
    adj = [[] for _ in range(g.n)]
    for a, b, w, _ in g.edges():
        adj[a].append((b, w))
        adj[b].append((a, w))
    dist = [None] * g.n
    heap = [(0, s)]
    while heap:
        d, x = heapq.heappop(heap)
        if dist[x] is not None:
            continue
        dist[x] = d
        for y, w in adj[x]:
            if dist[y] is None:
                heapq.heappush(heap, (d + w, y))
    if any(d is None for d in dist):
        raise GraphError("graph is disconnected")
    dist = np.array(dist)
    parent = np.full(g.n, -1, dtype=np.int64)
    parent_edge = np.full(g.n, -1, dtype=np.int64)
    ids = np.arange(g.m)
    child = np.concatenate([g.v, g.u])
    par = np.concatenate([g.u, g.v])
    eid = np.concatenate([ids, ids])
    tight = dist[par] + np.concatenate([g.w, g.w]) == dist[child]
    child, par, eid = child[tight], par[tight], eid[tight]
    order = np.lexsort((eid, child))
    child, par, eid = child[order], par[order], eid[order]
    first = np.ones(len(child), dtype=bool)
    first[1:] = child[1:] != child[:-1]
    parent[child[first]] = par[first]
    parent_edge[child[first]] = eid[first]
    parent[s] = parent_edge[s] = -1
    return ShortestPathTree(s, parent, parent_edge, dist)


# random instances

def gen_random_graph(n: int, m: int, seed: int, max_weight: int = 1_000_000) -> WeightedGraph:
    """Connected simple graph: a random recursive spanning tree plus
    ``m - n + 1`` further distinct pairs, integer weights in [1, max_weight]."""
    if n < 1 or not (n - 1 <= m <= n * (n - 1) // 2):
        raise GraphError(f"infeasible size n={n}, m={m}")
    rng = np.random.default_rng(seed)
    perm = rng.permutation(n)
    if n > 1:
        attach = (rng.random(n - 1) * np.arange(1, n)).astype(np.int64)
        tu, tv = perm[1:], perm[attach]
    else:
        tu = tv = np.empty(0, np.int64)
    codes = np.minimum(tu, tv) * n + np.maximum(tu, tv)
    extra = m - (n - 1)
    if extra:
        if 2 * m > n * (n - 1) // 2:
            iu, iv = np.triu_indices(n, 1)
            pool = np.setdiff1d(iu * n + iv, codes)
            picked = rng.choice(pool, size=extra, replace=False)
        else:
            taken = set(codes.tolist())
            picked = []
            while len(picked) < extra:
                want = extra - len(picked)
                a = rng.integers(0, n, size=2 * want + 16)
                b = rng.integers(0, n, size=2 * want + 16)
                for x, y in zip(a.tolist(), b.tolist()):
                    if x == y:
                        continue
                    c = min(x, y) * n + max(x, y)
                    if c not in taken:
                        taken.add(c)
                        picked.append(c)
                        if len(picked) == extra:
                            break
            picked = np.array(picked, dtype=np.int64)
        codes = np.concatenate([codes, picked])
    edge_order = rng.permutation(m)
    codes = codes[edge_order]
    flip = rng.random(m) < 0.5
    a, b = codes // n, codes % n
    u = np.where(flip, b, a)
    v = np.where(flip, a, b)
    w = rng.integers(1, max_weight + 1, size=m)
    return WeightedGraph(n, u, v, w)
