"""Histogram of comparisons per decreasekey for every split-findmin variant.

    python3 scripts/budgets.py --n 4096 --ops 40000
"""

import argparse
from collections import Counter
from dataclasses import dataclass

from mstsens.splitfindmin import INF, ComparisonCounter, make_sf
from mstsens.splitfindmin.workload import WorkloadConfig, random_ops

VARIANTS = ["naive", "basis", "recursive:2", "recursive:3", "recursive:4", "star:2", "star:3",
            "star:4"]


@dataclass
class BudgetConfig:
    n: int = 4096
    ops: int = 40_000
    seeds: int = 3
    binary_search: bool = False


def histogram(variant, cfg):
    hist = Counter()
    other = 0
    for seed in range(cfg.seeds):
        counter = ComparisonCounter()
        sf = make_sf([INF] * cfg.n, variant, counter=counter, binary_search=cfg.binary_search)
        for op in random_ops(WorkloadConfig(n=cfg.n, ops=cfg.ops, seed=seed, split_share=0.1)):
            if op[0] == "dk":
                before = counter.counts["decreasekey"]
                sf.decreasekey(op[1], op[2])
                hist[counter.counts["decreasekey"] - before] += 1
            elif op[0] == "split":
                sf.split(op[1])
            else:
                sf.findmin(op[1])
        other += counter.total - counter.counts["decreasekey"]
    return hist, other / cfg.seeds


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n", type=int, default=BudgetConfig.n)
    p.add_argument("--ops", type=int, default=BudgetConfig.ops)
    p.add_argument("--seeds", type=int, default=BudgetConfig.seeds)
    p.add_argument("--binary-search", action="store_true")
    cfg = BudgetConfig(**vars(p.parse_args(argv)))
    print(f"n={cfg.n} ops={cfg.ops} seeds={cfg.seeds} binary_search={cfg.binary_search}")
    for variant in VARIANTS:
        hist, other = histogram(variant, cfg)
        spread = " ".join(f"{k}:{hist[k]}" for k in sorted(hist))
        print(f"{variant:12s} max={max(hist)}  other/run={other:.0f}  [{spread}]")


if __name__ == "__main__":
    main()
