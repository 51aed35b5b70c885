"""MST and shortest-path-tree sensitivity analysis.

For a tree edge e the sensitivity is the lightest non-tree edge whose
fundamental cycle passes through e (infinity if there is none); for a
non-tree edge it is the heaviest tree edge on its fundamental cycle.

Tree edges are handled offline with a split-findmin structure over the
vertices in preorder: non-tree edges are first cut at the LCA into
"vertical" edges (vertex to ancestor), then a single preorder sweep splits
off each child's subtree and lowers keys with the vertical edges whose
upper end is the current vertex.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

import numpy as np

from .graph import GraphError, ShortestPathTree, SpanningTree, WeightedGraph, mst, sssp
from .splitfindmin import INF, ComparisonCounter, make_sf
from .treequery import RootedTree, root_tree


@dataclass(frozen=True)
class VerticalEdgeSet:
    """Non-tree edges cut at their LCA, at most one (the lightest) per
    (lower, upper) pair, sorted by the preorder number of ``upper``."""

    lower: np.ndarray
    upper: np.ndarray
    key: np.ndarray
    origin: np.ndarray

    def __len__(self):
        return len(self.lower)


def vertical_edges(rt: RootedTree, us, vs, key_u, key_v, origin) -> VerticalEdgeSet:
    """Replace each (u, v) by (u, lca) and (v, lca) unless one end is an
    ancestor of the other. ``key_u`` labels the half hanging below on the
    u side, ``key_v`` the v side."""
    us, vs = np.asarray(us, np.int64), np.asarray(vs, np.int64)
    key_u, key_v = np.asarray(key_u), np.asarray(key_v)
    origin = np.asarray(origin, np.int64)
    anc = rt.lca_many(us, vs) if len(us) else np.empty(0, np.int64)
    su, sv = us != anc, vs != anc
    lower = np.concatenate([us[su], vs[sv]])
    upper = np.concatenate([anc[su], anc[sv]])
    key = np.concatenate([key_u[su], key_v[sv]])
    orig = np.concatenate([origin[su], origin[sv]])
    if len(lower):
        order = np.lexsort((key, upper, lower))
        lower, upper, key, orig = lower[order], upper[order], key[order], orig[order]
        first = np.ones(len(lower), dtype=bool)
        first[1:] = (lower[1:] != lower[:-1]) | (upper[1:] != upper[:-1])
        lower, upper, key, orig = lower[first], upper[first], key[first], orig[first]
        pre = np.asarray(rt.pre)
        order = np.lexsort((pre[lower], pre[upper]))
        lower, upper, key, orig = lower[order], upper[order], key[order], orig[order]
    return VerticalEdgeSet(lower, upper, key, orig)


def mst_vertical_edges(g: WeightedGraph, t: SpanningTree, rt: RootedTree) -> VerticalEdgeSet:
    nt = t.nontree_ids()
    rank = g.rank[nt]
    return vertical_edges(rt, g.u[nt], g.v[nt], rank, rank, nt)


def subtree_cut_minima(rt: RootedTree, ves: VerticalEdgeSet, variant: str = "recursive", *,
                       counter: ComparisonCounter | None = None, binary_search: bool = False,
                       debug: bool = False) -> list:
    """For each vertex v, the minimum key over vertical edges leaving the
    subtree of v upwards (INF if none; INF for the root)."""
    n = rt.n
    pre = np.asarray(rt.pre)
    lower_pre = pre[ves.lower].tolist()
    keys = ves.key.tolist()
    bounds = np.searchsorted(pre[ves.upper], np.arange(n + 1)).tolist()
    sf = make_sf([INF] * n, variant, counter=counter, m_expected=max(1, len(ves)),
                 binary_search=binary_search)
    findmin, split, decreasekey = sf.findmin, sf.split, sf.decreasekey
    order, children, rpre = rt.order, rt.children, rt.pre
    out = [INF] * n
    for i in range(n):
        u = order[i]
        if debug:
            _audit_sweep(rt, ves, sf, i)
        if i:
            out[u] = findmin(i)[0]
        for c in children[u]:
            split(rpre[c])
        for idx in range(bounds[i], bounds[i + 1]):
            decreasekey(lower_pre[idx], keys[idx])
    return out


def _audit_sweep(rt, ves, sf, i):
    # Just before iteration i the sequence holding u_i is exactly its
    # subtree, and each key there is the lightest vertical edge to a vertex
    # earlier in preorder than u_i.
    u = rt.order[i]
    assert sf.sequence_bounds(i) == (i, rt.subtree_end[u])
    best = {}
    for lo, up, k in zip(ves.lower.tolist(), ves.upper.tolist(), ves.key.tolist()):
        if rt.pre[up] < i:
            p = rt.pre[lo]
            best[p] = min(best.get(p, INF), k)
    for p in range(i, rt.subtree_end[u] + 1):
        assert sf.current_key(p) == best.get(p, INF)


def _check_tree(g, t, rt):
    if len(t) != g.n - 1:
        raise GraphError("t is not a spanning tree")
    if rt is None:
        return root_tree(g, t, 0)
    if rt.n != g.n or sorted(e for e in rt.parent_edge if e >= 0) != t.edge_ids.tolist():
        raise GraphError("rooted tree does not match t")
    return rt


def _rank_to_weight(g, key):
    return INF if key == INF else g.w[g.by_rank[key]].item()


def tree_edge_sensitivity(g: WeightedGraph, t: SpanningTree, rt: RootedTree | None = None,
                          variant: str = "recursive", *, counter: ComparisonCounter | None = None,
                          binary_search: bool = False, debug: bool = False) -> dict:
    """sens(e) for every tree edge via the split-findmin sweep."""
    rt = _check_tree(g, t, rt)
    if debug and mst(g) != t:
        raise GraphError("t is not the minimum spanning tree of g")
    ves = mst_vertical_edges(g, t, rt)
    minima = subtree_cut_minima(rt, ves, variant, counter=counter,
                                binary_search=binary_search, debug=debug)
    return {rt.parent_edge[x]: _rank_to_weight(g, minima[x])
            for x in range(g.n) if x != rt.root}


def nontree_edge_sensitivity(g: WeightedGraph, t: SpanningTree,
                             rt: RootedTree | None = None) -> dict:
    """sens(e) = heaviest tree edge on the fundamental cycle of e."""
    rt = _check_tree(g, t, rt)
    nt = t.nontree_ids()
    if not len(nt):
        return {}
    heaviest = rt.path_max_many(g.u[nt], g.v[nt])
    return dict(zip(nt.tolist(), g.w[heaviest].tolist()))


def full_sensitivity(g: WeightedGraph, t: SpanningTree, rt: RootedTree | None = None,
                     variant: str = "recursive", **kwargs) -> dict:
    rt = _check_tree(g, t, rt)
    sens = tree_edge_sensitivity(g, t, rt, variant, **kwargs)
    sens.update(nontree_edge_sensitivity(g, t, rt))
    return dict(sorted(sens.items()))


def brute_force_sensitivity(g: WeightedGraph, t: SpanningTree) -> dict:
    """Direct evaluation of the definition, O(mn).

    Tree edges: delete the edge, colour one side of the tree and take the
    lightest non-tree edge across. Non-tree edges: walk the tree path.
    """
    n = g.n
    u, v, w = g.u.tolist(), g.v.tolist(), g.w.tolist()
    tree = t.edge_ids.tolist()
    adj = [[] for _ in range(n)]
    for e in tree:
        adj[u[e]].append((v[e], e))
        adj[v[e]].append((u[e], e))
    parent, pedge, depth = [-1] * n, [-1] * n, [0] * n
    seen = [False] * n
    seen[0] = True
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for y, e in adj[x]:
            if not seen[y]:
                seen[y] = True
                parent[y], pedge[y], depth[y] = x, e, depth[x] + 1
                queue.append(y)
    if not all(seen):
        raise GraphError("t does not span g")

    sens = {}
    nontree = t.nontree_ids()
    nt_u, nt_v, nt_w = g.u[nontree], g.v[nontree], g.w[nontree]
    for e in tree:
        side = np.zeros(n, dtype=bool)
        start = u[e]
        side[start] = True
        stack = [start]
        while stack:
            x = stack.pop()
            for y, f in adj[x]:
                if f != e and not side[y]:
                    side[y] = True
                    stack.append(y)
        crossing = side[nt_u] != side[nt_v]
        sens[e] = nt_w[crossing].min().item() if crossing.any() else INF
    for e in nontree.tolist():
        x, y, best = u[e], v[e], None
        while x != y:
            if depth[x] >= depth[y]:
                f, x = pedge[x], parent[x]
            else:
                f, y = pedge[y], parent[y]
            best = w[f] if best is None else max(best, w[f])
        sens[e] = best
    return dict(sorted(sens.items()))


# perturbation semantics

class Outcome(Enum):
    STILL_MST = "still_mst"
    CHANGED = "changed"


class PerturbationCheck(NamedTuple):
    observed: Outcome
    predicted: Outcome

    @property
    def agrees(self) -> bool:
        return self.observed is self.predicted


def predict_perturbation(t: SpanningTree, sens: dict, e: int, new_w) -> Outcome:
    """A non-tree edge stays out iff new_w > sens(e); a tree edge stays in
    iff new_w < sens(e). Exact ties are settled by edge id, so callers
    should perturb away from them."""
    if t.in_tree[e]:
        keep = new_w < sens[e]
    else:
        keep = new_w > sens[e]
    return Outcome.STILL_MST if keep else Outcome.CHANGED


def verify_perturbation(g: WeightedGraph, t: SpanningTree, sens: dict, e: int, new_w,
                        solver=None) -> PerturbationCheck:
    """Set w(e) <- new_w, recompute the MST and compare with what ``sens`` predicts."""
    if not 0 <= e < g.m:
        raise GraphError(f"edge id {e} out of range")
    after = mst(g.with_weight(e, new_w), solver)
    observed = Outcome.STILL_MST if after == t else Outcome.CHANGED
    return PerturbationCheck(observed, predict_perturbation(t, sens, e, new_w))


def perturbation_epsilon(g: WeightedGraph) -> float:
    """Half the smallest gap between distinct weights (0.5 if all equal)."""
    values = np.unique(g.w)
    if len(values) < 2:
        return 0.5
    return float(np.diff(values).min()) / 2


# shortest path trees

def check_spt(g: WeightedGraph, spt: ShortestPathTree) -> None:
    """Raise unless every tree edge is tight and no edge is violated."""
    d = np.asarray(spt.dist)
    if d[spt.source] != 0:
        raise GraphError("source distance must be 0")
    if (np.concatenate([d[g.v] - d[g.u], d[g.u] - d[g.v]]) > np.concatenate([g.w, g.w])).any():
        raise GraphError("an edge violates the distance labels")
    child = np.flatnonzero(spt.parent_edge >= 0)
    if len(child) != g.n - 1:
        raise GraphError("shortest path tree must reach every vertex")
    pe = spt.parent_edge[child]
    if (d[child] != d[spt.parent[child]] + g.w[pe]).any():
        raise GraphError("a tree edge is not tight")


def sssp_sensitivity(g: WeightedGraph, spt: ShortestPathTree, variant: str = "recursive", *,
                     counter: ComparisonCounter | None = None) -> dict:
    """Largest weight each tree edge can take, and smallest weight each
    non-tree edge can take, with ``spt`` staying a shortest path tree.

    Non-tree (u, v): |d(u) - d(v)|. Tree edge into c: w + the least slack
    d(outside) + w(x, y) - d(inside) over non-tree edges with exactly one
    end in the subtree of c, found by the same sweep as the MST case with
    each LCA half-edge carrying the slack seen from its own side.
    """
    check_spt(g, spt)
    t = spt.as_spanning_tree(g)
    rt = root_tree(g, t, spt.source)
    d = np.asarray(spt.dist)
    nt = t.nontree_ids()
    u, v, w = g.u[nt], g.v[nt], g.w[nt]
    slack_u_side = d[v] + w - d[u]
    slack_v_side = d[u] + w - d[v]
    ves = vertical_edges(rt, u, v, slack_u_side, slack_v_side, nt)
    minima = subtree_cut_minima(rt, ves, variant, counter=counter)
    sens = {}
    for x in range(g.n):
        if x != rt.root:
            e = rt.parent_edge[x]
            sens[e] = INF if minima[x] == INF else g.w[e].item() + minima[x]
    sens.update(zip(nt.tolist(), np.abs(d[u] - d[v]).tolist()))
    return dict(sorted(sens.items()))


def spt_still_valid(g: WeightedGraph, spt: ShortestPathTree, e: int, new_w) -> bool:
    """Re-run Dijkstra with w(e) <- new_w and test whether every edge of
    ``spt`` is still tight under the new distances."""
    h = g.with_weight(e, new_w)
    d = sssp(h, spt.source).dist
    child = np.flatnonzero(spt.parent_edge >= 0)
    pe = spt.parent_edge[child]
    return bool((d[child] == d[spt.parent[child]] + h.w[pe]).all())


# output

def format_value(x) -> str:
    if x == INF:
        return "inf"
    if isinstance(x, float) and x.is_integer():
        return str(int(x))
    return str(x)


def format_sensitivity(g: WeightedGraph, sens: dict) -> str:
    """One ``s <u> <v> <w> <sens>`` line per edge in id order, 1-based vertices."""
    lines = [f"s {a + 1} {b + 1} {wt} {format_value(sens[e])}"
             for a, b, wt, e in g.edges() if e in sens]
    return "\n".join(lines) + ("\n" if lines else "")


__all__ = [
    "INF", "VerticalEdgeSet", "vertical_edges", "mst_vertical_edges", "subtree_cut_minima",
    "tree_edge_sensitivity", "nontree_edge_sensitivity", "full_sensitivity",
    "brute_force_sensitivity", "Outcome", "PerturbationCheck", "predict_perturbation",
    "verify_perturbation", "perturbation_epsilon", "check_spt", "sssp_sensitivity",
    "spt_still_valid", "format_sensitivity", "format_value",
]
