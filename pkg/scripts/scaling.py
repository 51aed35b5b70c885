"""Comparisons per edge of the tree-edge sweep as m grows at fixed n.

    python3 scripts/scaling.py --n 100000 --m 250000 500000 1000000 2000000
"""

import argparse
import csv
import sys
import time
from dataclasses import dataclass, field

from mstsens.graph import gen_random_graph, mst
from mstsens.sensitivity import tree_edge_sensitivity
from mstsens.splitfindmin import ComparisonCounter


@dataclass
class ScalingConfig:
    n: int = 100_000
    m: list = field(default_factory=lambda: [250_000, 500_000, 1_000_000, 2_000_000])
    variants: list = field(default_factory=lambda: ["basis", "recursive", "recursive:2",
                                                    "recursive:3", "star:2"])
    seed: int = 9


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n", type=int, default=ScalingConfig.n)
    p.add_argument("--m", type=int, nargs="+", default=ScalingConfig().m)
    p.add_argument("--variants", nargs="+", default=ScalingConfig().variants)
    p.add_argument("--seed", type=int, default=ScalingConfig.seed)
    cfg = ScalingConfig(**vars(p.parse_args(argv)))

    out = csv.writer(sys.stdout, lineterminator="\n")
    out.writerow(["n", "m", "variant", "split", "decreasekey", "total",
                  "per_edge", "sweep_s"])
    for m in cfg.m:
        g = gen_random_graph(cfg.n, m, cfg.seed)
        t = mst(g)
        for variant in cfg.variants:
            counter = ComparisonCounter()
            start = time.perf_counter()
            tree_edge_sensitivity(g, t, variant=variant, counter=counter)
            elapsed = time.perf_counter() - start
            c = counter.counts
            out.writerow([cfg.n, m, variant, c["split"], c["decreasekey"],
                          counter.total, f"{counter.total / m:.4f}", f"{elapsed:.2f}"])
            sys.stdout.flush()


if __name__ == "__main__":
    main()
