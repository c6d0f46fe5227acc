#!/usr/bin/env python3
"""Timing table: bit-map checker vs the normalizing baseline.

Builds one greedy complete cap per geometry cell and times both
checkers on it, best of --repeat.  Example:

    python3 scripts/bench_fast_vs_naive.py --cells 2,4 3,4 4,4 3,8 4,8 --repeat 3
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass

from capcheck import Cap, Geometry, check_fast, check_naive, greedy_extend


@dataclass(frozen=True)
class BenchConfig:
    cells: tuple[tuple[int, int], ...]
    repeat: int
    seed: int


def parse_args(argv: list[str] | None = None) -> BenchConfig:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument(
        "--cells", nargs="+", default=["2,4", "3,4", "4,4", "3,8", "4,8"],
        metavar="r,q",
    )
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    ns = ap.parse_args(argv)
    cells = tuple(tuple(int(t) for t in cell.split(",")) for cell in ns.cells)
    return BenchConfig(cells, ns.repeat, ns.seed)


def best_of(checker, c: Cap, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        checker(c)
        times.append(time.perf_counter() - t0)
    return min(times)


def main(argv: list[str] | None = None) -> int:
    cfg = parse_args(argv)
    print(f"{'geometry':>10} {'n':>6} {'fast_ms':>10} {'naive_ms':>10} {'ratio':>7}")
    for r, q in cfg.cells:
        g = Geometry(r, q)
        c = greedy_extend(Cap(g, ()), order_seed=cfg.seed)
        fast_s = best_of(check_fast, c, cfg.repeat)
        naive_s = best_of(check_naive, c, cfg.repeat)
        ratio = naive_s / fast_s if fast_s > 0 else float("inf")
        print(
            f"{g.label:>10} {c.n:>6} {fast_s * 1e3:>10.2f} "
            f"{naive_s * 1e3:>10.2f} {ratio:>6.1f}x"
        )
    return 0


if __name__ == "__main__":
    sys.exit(main())
