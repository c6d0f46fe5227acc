#!/usr/bin/env python3
"""Large-geometry demonstration: completeness in PG(12,4).

Loads a cap file, or draws a seeded pseudorandom cap of --size points,
validates it, and runs the sharded checker.  The coverage window is
what bounds memory: with --shards 32 --workers 4 the bit-maps alive at
any moment total 1 MiB instead of the full 8 MiB.  Examples:

    python3 scripts/pg12_stress.py --size 10000
    python3 scripts/pg12_stress.py --cap-file cap12.txt --shards 32 --workers 4
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from capcheck import Geometry, check_split, parse_cap, random_cap, validate_cap


@dataclass(frozen=True)
class StressConfig:
    cap_file: str | None
    size: int
    seed: int
    shards: int
    workers: int


def parse_args(argv: list[str] | None = None) -> StressConfig:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--cap-file", default=None, metavar="path")
    ap.add_argument("--size", type=int, default=10_000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--shards", type=int, default=1)
    ap.add_argument("--workers", type=int, default=1)
    ns = ap.parse_args(argv)
    return StressConfig(ns.cap_file, ns.size, ns.seed, ns.shards, ns.workers)


def main(argv: list[str] | None = None) -> int:
    cfg = parse_args(argv)
    g = Geometry(12, 4)
    t0 = time.perf_counter()
    if cfg.cap_file:
        c = parse_cap(Path(cfg.cap_file).read_text(), g)
        print(f"loaded {c.n} points from {cfg.cap_file}")
    else:
        c = random_cap(g, cfg.size, cfg.seed)
        print(f"grew a {c.n}-point cap (seed {cfg.seed}) in {time.perf_counter() - t0:.1f}s")

    t0 = time.perf_counter()
    witness = validate_cap(c)
    if witness is not None:
        print(f"not a cap: {witness}")
        return 2
    print(f"cap property verified in {time.perf_counter() - t0:.1f}s")

    rep = check_split(c, cfg.shards, cfg.workers)
    print(json.dumps(rep.to_json_dict(), indent=2))
    print(
        f"{'complete' if rep.complete else f'{rep.uncovered_count} uncovered'}; "
        f"{rep.marks_issued} marks in {rep.elapsed_ms / 1e3:.1f}s, "
        f"peak window memory {rep.peak_coverage_bytes} bytes"
    )
    return 0 if rep.complete else 1


if __name__ == "__main__":
    sys.exit(main())
