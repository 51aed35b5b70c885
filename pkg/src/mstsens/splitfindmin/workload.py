"""Seeded random operation sequences for fuzzing and benchmarks."""

from __future__ import annotations

import random
from dataclasses import dataclass


@dataclass(frozen=True)
class WorkloadConfig:
    n: int = 1000
    ops: int = 5000
    seed: int = 0
    split_share: float = 0.2
    findmin_share: float = 0.3
    max_key: int = 10**9


def random_ops(cfg: WorkloadConfig) -> list:
    """("dk", e, w), ("split", e) and ("fm", e) tuples, 0-based.

    Keys drift downwards so that a good share of decreasekeys really
    lowers something.
    """
    rng = random.Random(cfg.seed)
    ceiling = cfg.max_key
    ops = []
    for _ in range(cfg.ops):
        r = rng.random()
        e = rng.randrange(cfg.n)
        if r < cfg.split_share:
            ops.append(("split", e))
        elif r < cfg.split_share + cfg.findmin_share:
            ops.append(("fm", e))
        else:
            ceiling = max(1, ceiling - rng.randrange(cfg.max_key // max(1, cfg.ops) + 1))
            ops.append(("dk", e, rng.randrange(ceiling)))
    return ops


def run_ops(sf, ops) -> list:
    """Apply ``ops`` and return the keys reported by every findmin."""
    out = []
    for op in ops:
        if op[0] == "dk":
            sf.decreasekey(op[1], op[2])
        elif op[0] == "split":
            sf.split(op[1])
        else:
            out.append(sf.findmin(op[1])[0])
    return out
