"""Rooted spanning trees: preorder intervals, LCA and path maxima.

LCA uses an Euler tour with a sparse table over depths (O(1) per query);
path maxima use binary lifting over edge ranks (O(log n) per query). Both
have vectorised ``*_many`` forms for bulk work.
"""

from __future__ import annotations

import numpy as np

from .graph import GraphError, SpanningTree, WeightedGraph


class RootedTree:
    """A spanning tree hung from ``root``.

    ``order[i]`` is the vertex with preorder number i (0-based), ``pre`` is
    its inverse and the subtree of v occupies preorder numbers
    ``pre[v] .. subtree_end[v]``. Children are visited in adjacency order,
    i.e. by increasing tree-edge id.
    """

    def __init__(self, g: WeightedGraph, t: SpanningTree, root: int = 0):
        n = g.n
        if not 0 <= root < n:
            raise GraphError(f"root {root} out of range")
        if len(t) != n - 1:
            raise GraphError("tree must have n - 1 edges")
        self.n = n
        self.root = root
        self.graph = g
        tu, tv = g.u[t.edge_ids].tolist(), g.v[t.edge_ids].tolist()
        adj = [[] for _ in range(n)]
        for a, b, e in zip(tu, tv, t.edge_ids.tolist()):
            adj[a].append((b, e))
            adj[b].append((a, e))

        parent = [-1] * n
        parent_edge = [-1] * n
        depth = [0] * n
        children = [[] for _ in range(n)]
        order = []
        euler = []
        seen = [False] * n
        seen[root] = True
        # iterative DFS producing preorder and the Euler tour together
        stack = [(root, 0)]
        order.append(root)
        euler.append(root)
        while stack:
            x, i = stack[-1]
            if i < len(adj[x]):
                stack[-1] = (x, i + 1)
                y, e = adj[x][i]
                if seen[y]:
                    continue
                seen[y] = True
                parent[y] = x
                parent_edge[y] = e
                depth[y] = depth[x] + 1
                children[x].append(y)
                order.append(y)
                euler.append(y)
                stack.append((y, 0))
            else:
                stack.pop()
                if stack:
                    euler.append(stack[-1][0])
        if len(order) != n:
            raise GraphError("tree edges do not span the graph")

        pre = [0] * n
        for i, x in enumerate(order):
            pre[x] = i
        size = [1] * n
        for x in reversed(order):
            if parent[x] >= 0:
                size[parent[x]] += size[x]
        self.parent = parent
        self.parent_edge = parent_edge
        self.depth = depth
        self.children = children
        self.order = order
        self.pre = pre
        self.subtree_end = [pre[x] + size[x] - 1 for x in range(n)]
        self._build_lca(euler)
        self._build_lifting()

    # Euler tour + sparse table

    def _build_lca(self, euler):
        self.euler = np.array(euler, dtype=np.int64)
        depth = np.array(self.depth, dtype=np.int64)
        self._depth = depth
        first = np.full(self.n, -1, dtype=np.int64)
        idx = np.arange(len(euler))[::-1]
        first[self.euler[::-1]] = idx  # later writes win, i.e. the first visit
        self.first = first
        edep = depth[self.euler]
        table = [np.arange(len(euler), dtype=np.int64)]
        span = 1
        while 2 * span <= len(euler):
            prev = table[-1]
            a, b = prev[:-span], prev[span:]
            table.append(np.where(edep[a] <= edep[b], a, b))
            span *= 2
        self._table = table
        self._edep = edep
        self._first_list = first.tolist()
        self._euler_list = euler
        self._table_lists = None

    def lca(self, u: int, v: int) -> int:
        a, b = self._first_list[u], self._first_list[v]
        if a > b:
            a, b = b, a
        k = (b - a + 1).bit_length() - 1
        row = self._table[k]
        x, y = int(row[a]), int(row[b - (1 << k) + 1])
        return self._euler_list[x if self._edep[x] <= self._edep[y] else y]

    def lca_many(self, us, vs) -> np.ndarray:
        a = self.first[np.asarray(us, dtype=np.int64)]
        b = self.first[np.asarray(vs, dtype=np.int64)]
        lo, hi = np.minimum(a, b), np.maximum(a, b)
        length = hi - lo + 1
        k = np.floor(np.log2(length)).astype(np.int64)
        # guard against floating error at exact powers of two
        k -= (1 << k) > length
        k += (1 << (k + 1)) <= length
        out = np.empty(len(lo), dtype=np.int64)
        for level in np.unique(k).tolist():
            sel = k == level
            row = self._table[level]
            x = row[lo[sel]]
            y = row[hi[sel] - (1 << level) + 1]
            out[sel] = np.where(self._edep[x] <= self._edep[y], x, y)
        return self.euler[out]

    # binary lifting for path maxima

    def _build_lifting(self):
        n = self.n
        rank = self.graph.rank
        parent = np.array(self.parent, dtype=np.int64)
        pedge = np.array(self.parent_edge, dtype=np.int64)
        up0 = np.where(parent < 0, np.arange(n), parent)
        mx0 = np.full(n, -1, dtype=np.int64)
        mx0[pedge >= 0] = rank[pedge[pedge >= 0]]
        up, mx = [up0], [mx0]
        levels = max(1, (n - 1).bit_length())
        for _ in range(1, levels):
            prev_up, prev_mx = up[-1], mx[-1]
            up.append(prev_up[prev_up])
            mx.append(np.maximum(prev_mx, prev_mx[prev_up]))
        self._up = up
        self._mx = mx

    def _climb(self, x, steps):
        best = np.full(len(x), -1, dtype=np.int64)
        for k in range(len(self._up)):
            bit = (steps >> k) & 1 == 1
            if not bit.any():
                continue
            best = np.where(bit, np.maximum(best, self._mx[k][x]), best)
            x = np.where(bit, self._up[k][x], x)
        return best

    def path_max_many(self, us, vs) -> np.ndarray:
        """Edge id of the heaviest tree edge on each u-v path (u != v)."""
        us = np.asarray(us, dtype=np.int64)
        vs = np.asarray(vs, dtype=np.int64)
        if (us == vs).any():
            raise GraphError("path_max needs distinct endpoints")
        anc = self.lca_many(us, vs)
        d = self._depth
        best = np.maximum(self._climb(us, d[us] - d[anc]), self._climb(vs, d[vs] - d[anc]))
        return self.graph.by_rank[best]

    def path_max(self, u: int, v: int):
        """(weight, edge id) of the heaviest edge on the tree path u-v."""
        if u == v:
            raise GraphError("path_max needs distinct endpoints")
        e = int(self.path_max_many([u], [v])[0])
        return self.graph.w[e].item(), e

    def in_subtree(self, x: int, v: int) -> bool:
        """Whether x lies in the subtree rooted at v."""
        return self.pre[v] <= self.pre[x] <= self.subtree_end[v]


def root_tree(g: WeightedGraph, t: SpanningTree, root: int = 0) -> RootedTree:
    return RootedTree(g, t, root)
