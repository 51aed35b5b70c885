"""Acceptance gate: one test per criterion, each reporting PASS/FAIL in the
terminal summary (see conftest.py)."""

import math
import random
import time
from functools import lru_cache

import numpy as np
import pytest

from mstsens.graph import gen_random_graph, mst, sssp
from mstsens.reduction import sensitivity_via_mst
from mstsens.sensitivity import (INF, brute_force_sensitivity, full_sensitivity,
                                 mst_vertical_edges, perturbation_epsilon, spt_still_valid,
                                 sssp_sensitivity, tree_edge_sensitivity, verify_perturbation)
from mstsens.splitfindmin import BasisSF, ComparisonCounter, NaiveSF, RecursiveSF, make_sf
from mstsens.splitfindmin.workload import WorkloadConfig, random_ops, run_ops
from mstsens.treequery import root_tree


@lru_cache(maxsize=None)
def sensitivity_corpus():
    """100 seeded connected graphs with n <= 200 and m <= 2000."""
    out = []
    for seed in range(100):
        rng = np.random.default_rng(10_000 + seed)
        n = int(rng.integers(2, 201))
        m = int(rng.integers(n - 1, min(n * (n - 1) // 2, 2000) + 1))
        w = int(rng.choice([10, 1000, 10 ** 6]))
        g = gen_random_graph(n, m, seed, max_weight=w)
        out.append((g, mst(g)))
    return out


def test_criterion_1_split_findmin_oracle(criterion):
    variants = ["basis", "recursive:2", "recursive:3", "star:2", "star:3"]
    start = time.perf_counter()
    mismatches = 0
    for seed in range(200):
        cfg = WorkloadConfig(n=1000, ops=5000, seed=seed)
        ops = random_ops(cfg)
        expected = run_ops(NaiveSF([INF] * cfg.n, ComparisonCounter()), ops)
        for variant in variants:
            if run_ops(make_sf([INF] * cfg.n, variant), ops) != expected:
                mismatches += 1
    elapsed = time.perf_counter() - start
    ok = mismatches == 0 and elapsed < 60
    criterion(1, "split-findmin oracle equivalence", ok,
              f"200 seqs x {len(variants)} variants, {mismatches} mismatches, {elapsed:.1f}s")
    assert ok


def split_schedules(n, seed):
    rng = random.Random(seed)
    yield "peel-left", list(range(1, n))
    yield "peel-right", list(range(n - 1, 0, -1))
    mids, queue = [], [(0, n)]
    while queue:
        lo, hi = queue.pop(0)
        if hi - lo > 1:
            mid = (lo + hi) // 2
            mids.append(mid)
            queue += [(lo, mid), (mid, hi)]
    yield "bisect", mids
    cuts = list(range(1, n))
    rng.shuffle(cuts)
    yield "random", cuts
    yield "odd-then-even", list(range(1, n, 2)) + list(range(2, n, 2))


def run_schedule(sf, counter, cuts, rng, n):
    """Interleave splits with decreasekeys; return the worst decreasekey."""
    worst = 0
    for x in cuts:
        sf.split(x)
        for _ in range(2):
            before = counter.counts["decreasekey"]
            sf.decreasekey(rng.randrange(n), rng.randrange(10 ** 6))
            worst = max(worst, counter.counts["decreasekey"] - before)
    return worst


def test_criterion_2_basis_budget(criterion):
    ok, details = True, []
    for n in (16, 256, 4096):
        bound = 3 * n * math.ceil(math.log2(n)) - 2 * n
        worst_other, worst_dk = 0, 0
        for name, cuts in split_schedules(n, n):
            rng = random.Random(n)
            counter = ComparisonCounter()
            sf = BasisSF([rng.randrange(10 ** 6) for _ in range(n)], counter)
            worst_dk = max(worst_dk, run_schedule(sf, counter, cuts, rng, n))
            other = counter.total - counter.counts["decreasekey"]
            worst_other = max(worst_other, other)
        ok &= worst_dk <= 3 and worst_other < bound
        details.append(f"n={n}: dk<={worst_dk}, other {worst_other} < {bound}")
    criterion(2, "basis comparison budget", ok, "; ".join(details))
    assert ok


def test_criterion_3_recursive_budget(criterion):
    ok, details = True, []
    for level in (2, 3):
        worst = 0
        for n in (1000, 4096):
            for name, cuts in split_schedules(n, level):
                rng = random.Random(level)
                counter = ComparisonCounter()
                sf = RecursiveSF([INF] * n, level, counter)
                worst = max(worst, run_schedule(sf, counter, cuts, rng, n))
            for seed in range(5):
                counter = ComparisonCounter()
                sf = RecursiveSF([INF] * n, level, counter)
                for op in random_ops(WorkloadConfig(n=n, ops=8000, seed=seed, split_share=0.1)):
                    if op[0] == "dk":
                        before = counter.counts["decreasekey"]
                        sf.decreasekey(op[1], op[2])
                        worst = max(worst, counter.counts["decreasekey"] - before)
                    elif op[0] == "split":
                        sf.split(op[1])
        ok &= worst <= 2 * level + 1
        details.append(f"level {level}: max {worst} <= {2 * level + 1}")
    criterion(3, "recursive decreasekey budget", ok, "; ".join(details))
    assert ok


def test_criterion_4_mst_sensitivity(criterion):
    variants = ["naive", "basis", "recursive", "star"]
    start = time.perf_counter()
    bad = 0
    for g, t in sensitivity_corpus():
        oracle = brute_force_sensitivity(g, t)
        rt = root_tree(g, t)
        for variant in variants:
            if full_sensitivity(g, t, rt, variant) != oracle:
                bad += 1
    elapsed = time.perf_counter() - start
    ok = bad == 0 and elapsed < 60
    criterion(4, "MST sensitivity vs brute force", ok,
              f"100 graphs x {len(variants)} variants, {bad} mismatches, {elapsed:.1f}s")
    assert ok


def test_criterion_5_perturbation(criterion):
    checks = failures = 0
    for seed in range(50):
        rng = np.random.default_rng(20_000 + seed)
        n = int(rng.integers(5, 60))
        m = int(rng.integers(n - 1, min(n * (n - 1) // 2, 4 * n) + 1))
        g = gen_random_graph(n, m, seed, max_weight=int(rng.choice([20, 10 ** 6])))
        t = mst(g)
        sens = full_sensitivity(g, t)
        eps = perturbation_epsilon(g)
        for e in range(g.m):
            s = sens[e]
            if s == INF:
                # a bridge can grow without bound
                points = [g.w[e].item() * 10 + 10 ** 9]
            else:
                points = [s - eps, s + eps]
            for new_w in points:
                checks += 1
                if not verify_perturbation(g, t, sens, e, new_w).agrees:
                    failures += 1
    ok = failures == 0
    criterion(5, "perturbation semantics", ok, f"{checks} MST recomputations, {failures} disagree")
    assert ok


def test_criterion_6_reduction(criterion):
    bad = levels = condensed = 0
    level_ok = True
    for g, t in sensitivity_corpus():
        trace = []
        if sensitivity_via_mst(g, t, trace=trace) != tree_edge_sensitivity(g, t):
            bad += 1
        for s in trace:
            levels += 1
            level_ok &= s.nontree_sparse <= s.n - 1
            if s.contracted_n is not None:
                condensed += 1
                level_ok &= s.contracted_n < s.n / 2
    ok = bad == 0 and level_ok
    criterion(6, "reduction equivalence", ok,
              f"{bad} mismatches; {levels} levels, {condensed} condensed, bounds "
              f"{'hold' if level_ok else 'violated'}")
    assert ok


def test_criterion_7_sssp(criterion):
    checks = failures = 0
    eps = 0.5  # thresholds are integers for integer weights
    for seed in range(50):
        rng = np.random.default_rng(30_000 + seed)
        n = int(rng.integers(3, 50))
        m = int(rng.integers(n - 1, min(n * (n - 1) // 2, 4 * n) + 1))
        g = gen_random_graph(n, m, seed, max_weight=int(rng.choice([5, 100])))
        spt = sssp(g, int(rng.integers(0, n)))
        in_tree = spt.as_spanning_tree(g).in_tree
        sens = sssp_sensitivity(g, spt)
        for e in range(g.m):
            w, s = g.w[e].item(), sens[e]
            if in_tree[e]:
                if s == INF:
                    cases = [(w + 10 ** 9, True)]
                else:
                    # a tree edge may always keep its own weight; below
                    # that, lowering it is a different question
                    cases = [(max(w, s - eps), True), (s + eps, False)]
            else:
                cases = [(s + eps, True)]
                if s - eps > 0:
                    cases.append((s - eps, False))
            for new_w, expect_valid in cases:
                checks += 1
                if spt_still_valid(g, spt, e, new_w) != expect_valid:
                    failures += 1
    ok = failures == 0
    criterion(7, "SSSP sensitivity thresholds", ok, f"{checks} Dijkstra re-runs, {failures} disagree")
    assert ok


def test_criterion_8_vertical_edge_bound(criterion):
    worst = 0.0
    ok = True
    for g, t in sensitivity_corpus():
        count = len(mst_vertical_edges(g, t, root_tree(g, t)))
        limit = 2 * (g.m - g.n + 1)
        ok &= count <= limit
        if limit:
            worst = max(worst, count / limit)
    criterion(8, "vertical edge bound", ok, f"max count / 2(m-n+1) = {worst:.3f}")
    assert ok


def test_criterion_9_scaling(criterion):
    start = time.perf_counter()
    n = 10 ** 5
    per_edge = {}
    for m in (10 ** 6, 2 * 10 ** 6):
        g = gen_random_graph(n, m, 9)
        t = mst(g)
        counter = ComparisonCounter()
        tree_edge_sensitivity(g, t, variant="recursive", counter=counter)
        per_edge[m] = counter.total / m
    elapsed = time.perf_counter() - start
    ratio = per_edge[2 * 10 ** 6] / per_edge[10 ** 6]
    ok = per_edge[10 ** 6] <= 12 and ratio <= 1.1 and elapsed < 120
    criterion(9, "scaling sanity", ok,
              f"comparisons/m = {per_edge[10 ** 6]:.3f} (m=1e6), {per_edge[2 * 10 ** 6]:.3f} "
              f"(m=2e6), ratio {ratio:.3f}, {elapsed:.1f}s")
    assert ok
