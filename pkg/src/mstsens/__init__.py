"""Offline MST and shortest-path-tree sensitivity analysis built on
split-findmin structures."""

from .ackermann import SATURATED, ackermann, alpha, lam
from .graph import (GraphError, ShortestPathTree, SpanningTree, WeightedGraph, gen_random_graph,
                    kruskal, mst, parse_graph, prim, serialize_graph, sssp)
from .reduction import sensitivity_via_mst
from .sensitivity import (brute_force_sensitivity, format_sensitivity, full_sensitivity,
                          nontree_edge_sensitivity, sssp_sensitivity, tree_edge_sensitivity,
                          verify_perturbation)
from .splitfindmin import INF, ComparisonCounter, make_sf
from .treequery import RootedTree, root_tree

__all__ = [
    "SATURATED", "ackermann", "alpha", "lam", "GraphError", "ShortestPathTree", "SpanningTree",
    "WeightedGraph", "gen_random_graph", "kruskal", "mst", "parse_graph", "prim",
    "serialize_graph", "sssp", "sensitivity_via_mst", "brute_force_sensitivity",
    "format_sensitivity", "full_sensitivity", "nontree_edge_sensitivity", "sssp_sensitivity",
    "tree_edge_sensitivity", "verify_perturbation", "INF", "ComparisonCounter", "make_sf",
    "RootedTree", "root_tree",
]
