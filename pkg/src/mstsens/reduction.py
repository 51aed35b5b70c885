"""Tree-edge sensitivity by reduction to minimum spanning tree computations.

Each round first sparsifies (only the minimum spanning forest of the
non-tree edges can realise a tree edge's sensitivity, so at most n - 1
non-tree edges survive) and then condenses: maximal tree paths through
degree-2 vertices are cut out into interval-stabbing subproblems, paths
between two hubs (degree >= 3) become single edges and paths ending in a
leaf disappear. The remaining tree has fewer than n/2 vertices.

Edge keys inside the recursion are ranks in (weight, id) order, so every
comparison is tie-free.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass, field

import numpy as np

from .graph import GraphError, SpanningTree, WeightedGraph, mst
from .splitfindmin import INF
from .treequery import root_tree

BASE_CASE_N = 32


@dataclass
class LevelStats:
    n: int
    nontree_in: int
    nontree_sparse: int
    contracted_n: int | None = None
    path: bool = False
    base: bool = False


@dataclass
class Chain:
    """Maximal tree path hanging below hub ``vertices[0]``; ends at a hub
    or a leaf. ``edges[i]`` is the tree edge between vertices i and i+1."""

    vertices: list
    edges: list
    leaf_end: bool
    internal: list = field(default_factory=list)


@dataclass
class CondensedInstance:
    hubs: list                 # T' vertex j is original vertex hubs[j]
    tree: list                 # T' edges as (a, b) over hub indices
    tree_chain: list           # chain index behind each T' edge
    external: list             # (a, b, key) over hub indices
    chains: list
    edge_slot: dict            # tree edge -> (chain index, position, T' edge or None)


def internal_path_sensitivity(path, edges) -> list:
    """Stabbing minima on a path: for each path edge (i, i+1), the least
    weight of an interval (a, b, w) with a <= i < b. Sweep left to right
    with a heap of open intervals; intervals whose right end has passed
    are dropped lazily."""
    k = path if isinstance(path, int) else len(path)
    spans = sorted(edges)
    for a, b, _ in spans:
        if not 0 <= a < b < k:
            raise IndexError(f"interval ({a}, {b}) invalid on a path of {k} vertices")
    out = [INF] * max(0, k - 1)
    heap = []
    j = 0
    for i in range(k - 1):
        while j < len(spans) and spans[j][0] <= i:
            a, b, w = spans[j]
            heapq.heappush(heap, (w, b))
            j += 1
        while heap and heap[0][1] <= i:
            heapq.heappop(heap)
        if heap:
            out[i] = heap[0][0]
    return out


def _tree_graph(n, tree):
    g = WeightedGraph.from_edges(n, [(a, b, 0) for a, b in tree])
    return g, SpanningTree.from_ids(g, range(len(tree)))


def _sparsify(n, tree, nontree, solver):
    """Minimum spanning forest of the non-tree edges, computed with a
    connected-graph solver by adding the tree edges as heavier than any
    non-tree edge."""
    if not nontree:
        return []
    top = max(k for _, _, k in nontree) + 1
    edges = [(a, b, k) for a, b, k in nontree] + [(a, b, top + i) for i, (a, b) in enumerate(tree)]
    g = WeightedGraph.from_edges(n, edges)
    keep = mst(g, solver).edge_ids
    keep = keep[keep < len(nontree)]
    return [nontree[i] for i in keep.tolist()]


def _base_case(n, tree, nontree):
    # walk each non-tree edge's tree path and lower every edge on it
    adj = [[] for _ in range(n)]
    for i, (a, b) in enumerate(tree):
        adj[a].append((b, i))
        adj[b].append((a, i))
    parent, pedge, depth = [-1] * n, [-1] * n, [0] * n
    seen = [False] * n
    seen[0] = True
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for y, i in adj[x]:
            if not seen[y]:
                seen[y] = True
                parent[y], pedge[y], depth[y] = x, i, depth[x] + 1
                queue.append(y)
    out = [INF] * len(tree)
    for a, b, k in nontree:
        while a != b:
            if depth[a] < depth[b]:
                a, b = b, a
            i = pedge[a]
            if k < out[i]:
                out[i] = k
            a = parent[a]
    return out


def condense(n, tree, nontree) -> CondensedInstance:
    """Cut the tree into chains between vertices of degree != 2 and route
    every non-tree edge onto them.

    The tree must have a vertex of degree >= 3. A non-tree endpoint inside
    a chain is moved to the chain end its cycle leaves through, leaving an
    interval on that chain behind. Edges that end up joining a hub to
    itself vanish; the rest become external edges of the contracted tree.
    """
    degree = [0] * n
    for a, b in tree:
        degree[a] += 1
        degree[b] += 1
    root = next((x for x in range(n) if degree[x] >= 3), None)
    if root is None:
        raise GraphError("condense needs a vertex of tree degree >= 3")
    g, t = _tree_graph(n, tree)
    rt = root_tree(g, t, root)
    pre, end = rt.pre, rt.subtree_end

    hub_index = {}
    hubs = []
    for x in rt.order:
        if degree[x] >= 3:
            hub_index[x] = len(hubs)
            hubs.append(x)
    chains = []
    chain_of = [-1] * n
    pos_of = [0] * n
    edge_slot = {}
    ctree, tree_chain = [], []
    for h in hubs:
        for c in rt.children[h]:
            verts, eids = [h], []
            x = c
            while True:
                verts.append(x)
                eids.append(rt.parent_edge[x])
                if degree[x] != 2:
                    break
                x = rt.children[x][0]
            ci = len(chains)
            leaf = degree[x] == 1
            chains.append(Chain(verts, eids, leaf))
            slot = None
            if not leaf:
                slot = len(ctree)
                ctree.append((hub_index[h], hub_index[x]))
                tree_chain.append(ci)
            for i, e in enumerate(eids):
                edge_slot[e] = (ci, i, slot)
            for i in range(1, len(verts) - (0 if leaf else 1)):
                chain_of[verts[i]] = ci
                pos_of[verts[i]] = i

    external = {}
    for a, b, k in nontree:
        ca, cb = chain_of[a], chain_of[b]
        if ca >= 0 and ca == cb:
            i, j = sorted((pos_of[a], pos_of[b]))
            chains[ca].internal.append((i, j, k))
            continue
        ends = []
        for z, other, cz in ((a, b, ca), (b, a, cb)):
            if cz < 0:
                ends.append(z)
                continue
            ch = chains[cz]
            last = len(ch.vertices) - 1
            bottom = ch.vertices[last]
            below = not ch.leaf_end and pre[bottom] <= pre[other] <= end[bottom]
            if below:
                ch.internal.append((pos_of[z], last, k))
                ends.append(bottom)
            else:
                ch.internal.append((0, pos_of[z], k))
                ends.append(ch.vertices[0])
        ha, hb = hub_index[ends[0]], hub_index[ends[1]]
        if ha == hb:
            continue
        pair = (ha, hb) if ha < hb else (hb, ha)
        if k < external.get(pair, INF):
            external[pair] = k
    ext = [(a, b, k) for (a, b), k in external.items()]
    return CondensedInstance(hubs, ctree, tree_chain, ext, chains, edge_slot)


def _solve(n, tree, nontree, solver, trace):
    """Sensitivity keys for ``tree`` (a list of (a, b) spanning 0..n-1)."""
    stats = LevelStats(n, len(nontree), 0)
    if trace is not None:
        trace.append(stats)
    if not nontree:
        return [INF] * len(tree)
    nontree = _sparsify(n, tree, nontree, solver)
    stats.nontree_sparse = len(nontree)
    if n <= BASE_CASE_N:
        stats.base = True
        return _base_case(n, tree, nontree)

    degree = [0] * n
    for a, b in tree:
        degree[a] += 1
        degree[b] += 1
    if max(degree) <= 2:
        stats.path = True
        return _solve_path(n, tree, nontree, degree)

    inst = condense(n, tree, nontree)
    stats.contracted_n = len(inst.hubs)
    outer = _solve(len(inst.hubs), inst.tree, inst.external, solver, trace)
    inner = [internal_path_sensitivity(len(ch.vertices), ch.internal) for ch in inst.chains]
    out = [INF] * len(tree)
    for e, (ci, i, slot) in inst.edge_slot.items():
        v = inner[ci][i]
        if slot is not None and outer[slot] < v:
            v = outer[slot]
        out[e] = v
    return out


def _solve_path(n, tree, nontree, degree):
    adj = [[] for _ in range(n)]
    for i, (a, b) in enumerate(tree):
        adj[a].append((b, i))
        adj[b].append((a, i))
    x = degree.index(1)
    pos = [0] * n
    order_edges = []
    prev = -1
    for p in range(n - 1):
        pos[x] = p
        y, i = next((y, i) for y, i in adj[x] if y != prev)
        order_edges.append(i)
        prev, x = x, y
    pos[x] = n - 1
    spans = [(min(pos[a], pos[b]), max(pos[a], pos[b]), k) for a, b, k in nontree]
    sens = internal_path_sensitivity(n, spans)
    out = [INF] * len(tree)
    for p, i in enumerate(order_edges):
        out[i] = sens[p]
    return out


def sensitivity_via_mst(g: WeightedGraph, t: SpanningTree, mst_solver=None, *,
                        trace: list | None = None, check: bool = True) -> dict:
    """Tree-edge sensitivities using only MST calls plus linear work per
    round. ``trace`` (a list) receives one :class:`LevelStats` per round."""
    if len(t) != g.n - 1:
        raise GraphError("t is not a spanning tree")
    if check and mst(g) != t:
        raise GraphError("t is not the minimum spanning tree of g")
    tids = t.edge_ids.tolist()
    tree = list(zip(g.u[tids].tolist(), g.v[tids].tolist()))
    nt = t.nontree_ids()
    nontree = list(zip(g.u[nt].tolist(), g.v[nt].tolist(), g.rank[nt].tolist()))
    keys = _solve(g.n, tree, nontree, mst_solver, trace)
    by_rank = g.by_rank
    return {e: (INF if k == INF else g.w[by_rank[k]].item()) for e, k in zip(tids, keys)}


def check_trace(trace) -> None:
    """Per-round size guarantees; raises AssertionError on violation."""
    for s in trace:
        assert s.nontree_sparse <= s.n - 1, s
        if s.contracted_n is not None:
            assert s.contracted_n < s.n / 2, s


__all__ = ["BASE_CASE_N", "LevelStats", "Chain", "CondensedInstance", "internal_path_sensitivity",
           "condense", "sensitivity_via_mst", "check_trace"]
