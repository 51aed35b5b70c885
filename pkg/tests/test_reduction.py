import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from mstsens.graph import GraphError, SpanningTree, WeightedGraph, gen_random_graph, mst, prim
from mstsens.reduction import (BASE_CASE_N, INF, LevelStats, check_trace, condense,
                               internal_path_sensitivity, sensitivity_via_mst)
from mstsens.sensitivity import brute_force_sensitivity, tree_edge_sensitivity


def tree_part(g, t, sens):
    return {e: sens[e] for e in t.edge_ids.tolist()}


def test_triangle(triangle):
    trace = []
    assert sensitivity_via_mst(triangle, mst(triangle), trace=trace) == {0: 5, 1: 5}
    assert trace == [LevelStats(3, 1, 1, base=True)]


def test_tree_input_needs_no_recursion():
    g = gen_random_graph(100, 99, 1)
    trace = []
    assert set(sensitivity_via_mst(g, mst(g), trace=trace).values()) == {INF}
    assert len(trace) == 1 and trace[0].nontree_sparse == 0


def test_rejects_non_mst(triangle):
    with pytest.raises(GraphError):
        sensitivity_via_mst(triangle, SpanningTree.from_ids(triangle, [0, 2]))
    with pytest.raises(GraphError):
        sensitivity_via_mst(triangle, SpanningTree.from_ids(triangle, [0]))


def test_internal_path_examples():
    assert internal_path_sensitivity(4, [(0, 3, 9)]) == [9, 9, 9]
    assert internal_path_sensitivity(["a", "b", "c", "d"], [(0, 1, 5), (1, 3, 3)]) == [5, 3, 3]
    assert internal_path_sensitivity(3, []) == [INF, INF]
    assert internal_path_sensitivity(1, []) == []
    for bad in [(0, 4, 1), (2, 2, 1), (-1, 1, 1), (2, 1, 1)]:
        with pytest.raises(IndexError):
            internal_path_sensitivity(4, [bad])


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 30), st.data())
def test_internal_path_matches_enumeration(k, data):
    spans = []
    if k >= 2:
        spans = data.draw(st.lists(
            st.tuples(st.integers(0, k - 2), st.integers(1, k - 1), st.integers(0, 20))
            .filter(lambda s: s[0] < s[1]), max_size=25))
    expected = [min([w for a, b, w in spans if a <= i < b], default=INF) for i in range(k - 1)]
    assert internal_path_sensitivity(k, spans) == expected


def caterpillar(spine, legs_at_ends=2):
    """Hubs at both ends of a path of degree-2 vertices, each with leaves."""
    edges = [(i, i + 1) for i in range(spine - 1)]
    n = spine
    for hub in (0, spine - 1):
        for _ in range(legs_at_ends):
            edges.append((hub, n))
            n += 1
    return n, edges


def test_condense_caterpillar():
    n, tree = caterpillar(10)
    inst = condense(n, tree, [(1, 5, 0), (12, 3, 1), (4, 11, 2)])
    assert sorted(inst.hubs) == [0, 9] and len(inst.hubs) < n / 2
    assert len(inst.tree) == 1
    spine = next(c for c in inst.chains if not c.leaf_end)
    assert len(spine.vertices) == 10
    # every tree edge is in exactly one chain
    assert sorted(inst.edge_slot) == list(range(len(tree)))


def test_straddling_edge_is_split_at_exit_end():
    # spine 0..9 between hubs 0 and 9; leaf 12 hangs off hub 9
    n, tree = caterpillar(10)
    inst = condense(n, tree, [(12, 3, 7)])
    spine = next(c for c in inst.chains if not c.leaf_end)
    leg = next(c for c in inst.chains if 12 in c.vertices)
    pos = spine.vertices.index(3)
    if spine.vertices[0] == 9:
        assert spine.internal == [(0, pos, 7)]
    else:
        assert spine.internal == [(pos, 9, 7)]
    assert leg.internal == [(0, 1, 7)]
    assert inst.external == []


def test_condense_requires_a_hub():
    with pytest.raises(GraphError):
        condense(4, [(0, 1), (1, 2), (2, 3)], [])


def graph_on_tree(n, tree, extra, seed):
    rng = np.random.default_rng(seed)
    edges = [(a, b, int(rng.integers(1, 50))) for a, b in tree]
    heavy = [(a, b, 1000 + int(rng.integers(0, 1000))) for a, b in extra]
    return WeightedGraph.from_edges(n, edges + heavy)


@pytest.mark.parametrize("seed", range(8))
def test_path_tree(seed):
    rng = np.random.default_rng(seed)
    n = 200
    tree = [(i, i + 1) for i in range(n - 1)]
    extra = {tuple(sorted(p)) for p in rng.integers(0, n, (300, 2)).tolist() if abs(p[0] - p[1]) > 1}
    g = graph_on_tree(n, tree, sorted(extra), seed)
    t = mst(g)
    assert t.edge_ids.tolist() == list(range(n - 1))
    trace = []
    assert sensitivity_via_mst(g, t, trace=trace) == tree_edge_sensitivity(g, t)
    assert trace[0].path


@pytest.mark.parametrize("seed", range(8))
def test_caterpillars_and_spiders(seed):
    rng = np.random.default_rng(seed)
    n, tree = caterpillar(60, legs_at_ends=3)
    # a spider: long legs from one centre
    legs = [(0, n)] + [(n + i, n + i + 1) for i in range(19)]
    legs += [(0, n + 20)] + [(n + 20 + i, n + 21 + i) for i in range(19)]
    tree = tree + legs
    n += 40
    extra = {tuple(sorted(p)) for p in rng.integers(0, n, (250, 2)).tolist() if p[0] != p[1]}
    extra -= {tuple(sorted(e)) for e in tree}
    g = graph_on_tree(n, tree, sorted(extra), seed)
    t = mst(g)
    trace = []
    got = sensitivity_via_mst(g, t, trace=trace)
    assert got == tree_part(g, t, brute_force_sensitivity(g, t))
    check_trace(trace)


@pytest.mark.parametrize("seed", range(40))
def test_random_graphs(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(2, 500))
    m = int(rng.integers(n - 1, min(n * (n - 1) // 2, 4 * n) + 1))
    g = gen_random_graph(n, m, seed, max_weight=int(rng.choice([5, 10 ** 6])))
    t = mst(g)
    trace = []
    assert sensitivity_via_mst(g, t, trace=trace) == tree_edge_sensitivity(g, t)
    check_trace(trace)
    assert len(trace) <= np.log2(n) + 2


def test_pluggable_solver():
    g = gen_random_graph(300, 1200, 5)
    t = mst(g)
    calls = []

    def solver(h):
        calls.append(h.n)
        return prim(h)

    assert sensitivity_via_mst(g, t, solver) == tree_edge_sensitivity(g, t)
    assert calls and calls[0] == 300


def test_base_case_threshold():
    g = gen_random_graph(BASE_CASE_N, 3 * BASE_CASE_N, 2)
    trace = []
    sensitivity_via_mst(g, mst(g), trace=trace)
    assert len(trace) == 1 and trace[0].base
