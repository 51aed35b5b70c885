"""Command-line front end.

    mstsens mst-sens  graph.txt [--algo splitfindmin|reduction|brute] [--variant V]
    mstsens sssp-sens graph.txt --source 1
    mstsens verify    --seeds 10 --n 100 --m 400
    mstsens sfm-replay ops.txt
    mstsens bench     --n 1000 10000 --m 5000 50000
    mstsens gen       --n 100 --m 400 --seed 1

Input paths may be ``-`` for stdin. Exit status: 0 ok, 1 invalid input or
oracle mismatch, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import sys
import time
from dataclasses import dataclass, field

from .graph import GraphError, gen_random_graph, mst, parse_graph, serialize_graph, sssp
from .reduction import sensitivity_via_mst
from .sensitivity import (brute_force_sensitivity, format_sensitivity, full_sensitivity,
                          nontree_edge_sensitivity, sssp_sensitivity, tree_edge_sensitivity)
from .splitfindmin import ComparisonCounter, parse_variant
from .splitfindmin.replay import ReplayError, format_key, replay

ALGORITHMS = ("splitfindmin", "reduction", "brute")


@dataclass
class RunConfig:
    command: str
    input: str = "-"
    output: str | None = None
    algorithm: str = "splitfindmin"
    variant: str = "recursive"
    seed: int = 0
    seeds: int = 10
    source: int = 1
    n: list = field(default_factory=lambda: [100])
    m: list = field(default_factory=lambda: [400])
    max_weight: int = 1_000_000


def _variant(text):
    try:
        parse_variant(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    return text


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mstsens", description=__doc__.split("\n\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add_variant(sp):
        sp.add_argument("--variant", type=_variant, default="recursive",
                        help="naive, basis, recursive[:level] or star[:level]")

    sp = sub.add_parser("mst-sens", help="sensitivity of every edge w.r.t. the MST")
    sp.add_argument("input")
    sp.add_argument("--algo", dest="algorithm", choices=ALGORITHMS, default="splitfindmin")
    add_variant(sp)
    sp.add_argument("-o", "--output")

    sp = sub.add_parser("sssp-sens", help="sensitivity w.r.t. a shortest path tree")
    sp.add_argument("input")
    sp.add_argument("--source", type=int, default=1, help="1-based source vertex")
    add_variant(sp)
    sp.add_argument("-o", "--output")

    sp = sub.add_parser("verify", help="compare all algorithms with the brute-force oracle")
    sp.add_argument("--seeds", type=int, default=10)
    sp.add_argument("--seed", type=int, default=0, help="first seed")
    sp.add_argument("--n", type=int, nargs=1, default=[100])
    sp.add_argument("--m", type=int, nargs=1, default=[400])
    add_variant(sp)

    sp = sub.add_parser("sfm-replay", help="run a split-findmin operation log")
    sp.add_argument("input")
    add_variant(sp)

    sp = sub.add_parser("bench", help="CSV of comparison counts and wall time")
    sp.add_argument("--n", type=int, nargs="+", default=[1000])
    sp.add_argument("--m", type=int, nargs="+", default=[5000])
    sp.add_argument("--algo", dest="algorithm", choices=ALGORITHMS, default="splitfindmin")
    add_variant(sp)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("-o", "--output")

    sp = sub.add_parser("gen", help="write a reproducible random connected graph")
    sp.add_argument("--n", type=int, nargs=1, required=True)
    sp.add_argument("--m", type=int, nargs=1, required=True)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--max-weight", type=int, default=1_000_000)
    sp.add_argument("-o", "--output")
    return p


def _read(path, stdin):
    if path == "-":
        return stdin.read()
    with open(path) as fh:
        return fh.read()


def _write(text, path, stdout):
    if path is None or path == "-":
        stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def mst_sens(g, algorithm="splitfindmin", variant="recursive", counter=None):
    t = mst(g)
    if algorithm == "brute":
        return brute_force_sensitivity(g, t)
    if algorithm == "reduction":
        sens = sensitivity_via_mst(g, t, check=False)
        sens.update(nontree_edge_sensitivity(g, t))
        return dict(sorted(sens.items()))
    return full_sensitivity(g, t, variant=variant, counter=counter)


def _cmd_mst_sens(cfg, stdin, stdout, stderr):
    g = parse_graph(_read(cfg.input, stdin))
    _write(format_sensitivity(g, mst_sens(g, cfg.algorithm, cfg.variant)), cfg.output, stdout)
    return 0


def _cmd_sssp_sens(cfg, stdin, stdout, stderr):
    g = parse_graph(_read(cfg.input, stdin), positive=True)
    if not 1 <= cfg.source <= g.n:
        raise GraphError(f"source {cfg.source} out of range 1..{g.n}")
    sens = sssp_sensitivity(g, sssp(g, cfg.source - 1), cfg.variant)
    _write(format_sensitivity(g, sens), cfg.output, stdout)
    return 0


def _cmd_verify(cfg, stdin, stdout, stderr):
    n, m = cfg.n[0], cfg.m[0]
    agree = 0
    for seed in range(cfg.seed, cfg.seed + cfg.seeds):
        g = gen_random_graph(n, m, seed)
        t = mst(g)
        oracle = brute_force_sensitivity(g, t)
        fast = full_sensitivity(g, t, variant=cfg.variant)
        tree_oracle = {e: oracle[e] for e in t.edge_ids.tolist()}
        ok = fast == oracle and sensitivity_via_mst(g, t) == tree_oracle
        if ok:
            agree += 1
        else:
            print(f"seed {seed}: mismatch", file=stderr)
    print(f"{agree}/{cfg.seeds} agree", file=stdout)
    return 0 if agree == cfg.seeds else 1


def _cmd_replay(cfg, stdin, stdout, stderr):
    for key in replay(_read(cfg.input, stdin).splitlines(), cfg.variant):
        print(format_key(key), file=stdout)
    return 0


def bench_rows(ns, ms, algorithm="splitfindmin", variant="recursive", seed=0):
    """Yield (n, m, algorithm, variant, comparisons, wall_ns) per feasible size pair.
    Comparisons are split-findmin comparisons of the tree-edge sweep and
    are left blank for algorithms that do not use it."""
    for n in ns:
        for m in ms:
            if not n - 1 <= m <= n * (n - 1) // 2:
                continue
            g = gen_random_graph(n, m, seed)
            t = mst(g)
            counter = ComparisonCounter()
            start = time.perf_counter_ns()
            if algorithm == "splitfindmin":
                tree_edge_sensitivity(g, t, variant=variant, counter=counter)
                comparisons = counter.total
            elif algorithm == "reduction":
                sensitivity_via_mst(g, t, check=False)
                comparisons = ""
            else:
                brute_force_sensitivity(g, t)
                comparisons = ""
            wall = time.perf_counter_ns() - start
            yield n, m, algorithm, variant if algorithm == "splitfindmin" else "", comparisons, wall


def _cmd_bench(cfg, stdin, stdout, stderr):
    out = stdout if cfg.output in (None, "-") else open(cfg.output, "w", newline="")
    try:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["n", "m", "algorithm", "variant", "comparisons", "wall_ns"])
        for row in bench_rows(cfg.n, cfg.m, cfg.algorithm, cfg.variant, cfg.seed):
            writer.writerow(row)
    finally:
        if out is not stdout:
            out.close()
    return 0


def _cmd_gen(cfg, stdin, stdout, stderr):
    g = gen_random_graph(cfg.n[0], cfg.m[0], cfg.seed, cfg.max_weight)
    _write(serialize_graph(g), cfg.output, stdout)
    return 0


COMMANDS = {
    "mst-sens": _cmd_mst_sens,
    "sssp-sens": _cmd_sssp_sens,
    "verify": _cmd_verify,
    "sfm-replay": _cmd_replay,
    "bench": _cmd_bench,
    "gen": _cmd_gen,
}


def parse_config(argv) -> RunConfig:
    ns = build_parser().parse_args(argv)
    fields = {k: v for k, v in vars(ns).items() if k in RunConfig.__dataclass_fields__}
    return RunConfig(**fields)


def run(cfg: RunConfig, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        return COMMANDS[cfg.command](cfg, stdin, stdout, stderr)
    except (GraphError, ReplayError, ValueError, IndexError, OSError) as exc:
        print(f"mstsens: error: {exc}", file=stderr)
        return 1


def main(argv=None) -> int:
    try:
        cfg = parse_config(sys.argv[1:] if argv is None else argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
