"""Completeness checking: is every outside point on a secant of the cap?

Three interchangeable checkers plus a sharded variant:

fast    marks the raw (non-normalized) code of every combination
        alpha*P1 + P2 in a bit-map over the whole code range, then
        decides each point by OR-ing the bits of its q-1 scalar
        multiples.  No normalization anywhere on the hot path.
naive   the baseline it replaces: normalizes every generated point and
        marks a byte per normalized point.
oracle  the definition, point by point, with no coverage map at all;
        only for small geometries.
split   the fast checker replayed once per contiguous window of the
        code range, keeping only one window of bits alive per worker;
        verdict and uncovered set are identical to fast for every
        (shards, workers).

All four agree exactly; the test suite holds them to that.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .cap import Cap
from .coverage import CoverageMap, mark_pair_secants, multiples_table
from .errors import CapTooLargeError, GeometryTooLargeError
from .geometry import (
    Geometry,
    enumerate_points,
    index_of_point,
    normalize,
    points_by_index,
    scalar_mul_codes,
    scalar_mul_point,
)

ORACLE_POINT_LIMIT = 1_000_000
_SCAN_CHUNK = 1 << 20


@dataclass(frozen=True)
class ScalarTable:
    """Precomputed scalar multiples of the cap points.

    array[i][j] = code of (j+1) * P_i; column 0 is the cap itself and
    the table holds exactly n*(q-1) codes.
    """

    geometry: Geometry
    array: np.ndarray = field(repr=False)

    @property
    def size(self) -> int:
        return self.array.size


def precompute_multiples(c: Cap) -> ScalarTable:
    return ScalarTable(c.geometry, multiples_table(c.codes(), c.geometry))


@dataclass(eq=False)
class CompletenessReport:
    complete: bool
    uncovered: np.ndarray  # normalized codes, ascending
    pairs_processed: int
    marks_issued: int
    algorithm: str  # fast | naive | oracle
    shards: int
    n: int
    geometry: str
    elapsed_ms: float
    peak_coverage_bytes: int

    @property
    def uncovered_count(self) -> int:
        return int(self.uncovered.size)

    def to_json_dict(self, max_witnesses: int = 10, all_witnesses: bool = False) -> dict:
        sample = self.uncovered if all_witnesses else self.uncovered[:max_witnesses]
        return {
            "complete": self.complete,
            "n": self.n,
            "geometry": self.geometry,
            "algorithm": self.algorithm,
            "shards": self.shards,
            "uncovered_count": self.uncovered_count,
            "uncovered_sample": [int(u) for u in sample],
            "pairs_processed": self.pairs_processed,
            "elapsed_ms": self.elapsed_ms,
            "peak_coverage_bytes": self.peak_coverage_bytes,
        }


def _require_checkable(c: Cap) -> None:
    if c.n > c.geometry.point_count:
        raise CapTooLargeError(
            f"{c.n} points cannot be a cap of {c.geometry.label}"
        )


def _finish(
    c: Cap,
    uncovered: np.ndarray,
    pairs: int,
    marks: int,
    algorithm: str,
    shards: int,
    peak: int,
    t0: float,
) -> CompletenessReport:
    return CompletenessReport(
        complete=uncovered.size == 0,
        uncovered=uncovered,
        pairs_processed=pairs,
        marks_issued=marks,
        algorithm=algorithm,
        shards=shards,
        n=c.n,
        geometry=c.geometry.label,
        elapsed_ms=(time.perf_counter() - t0) * 1000.0,
        peak_coverage_bytes=peak,
    )


# ---------------------------------------------------------------------------
# fast checker and its sharded replay
# ---------------------------------------------------------------------------


def _scan_window(cov: CoverageMap, g: Geometry) -> np.ndarray:
    """Covered flags, in enumeration order, from one window's bits.

    Walks the normalized codes block by block; for each nonzero alpha
    the representative alpha*Q of a block-d point lands in
    [alpha*q^d, (alpha+1)*q^d), so whole (d, alpha) strips that miss
    the window are skipped outright.
    """
    covered = np.empty(g.point_count, dtype=bool)
    pos = 0
    for d in range(g.r + 1):
        base = 1 << (g.k * d)
        alphas = [
            a
            for a in g.field.nonzero_elements()
            if a * base < cov.hi and (a + 1) * base > cov.lo
        ]
        for start in range(0, base, _SCAN_CHUNK):
            stop = min(base, start + _SCAN_CHUNK)
            size = stop - start
            if not alphas:
                covered[pos : pos + size] = False
                pos += size
                continue
            s = np.arange(start, stop, dtype=np.uint64)
            acc = None
            for alpha in alphas:
                rep = np.uint64(alpha * base) + scalar_mul_codes(alpha, s, g, blocks=d)
                bits = cov.test_codes(rep)
                acc = bits if acc is None else (acc | bits)
            covered[pos : pos + size] = acc
            pos += size
    return covered


def _strip_cap_points(uncovered_idx: np.ndarray, c: Cap) -> np.ndarray:
    codes = points_by_index(uncovered_idx.astype(np.uint64), c.geometry)
    if c.n:
        cap_sorted = np.sort(c.codes())
        pos = np.searchsorted(cap_sorted, codes)
        pos[pos == cap_sorted.size] = cap_sorted.size - 1
        codes = codes[cap_sorted[pos] != codes]
    return codes


def _check_marking(c: Cap, shards: int, workers: int) -> CompletenessReport:
    _require_checkable(c)
    if shards < 1 or workers < 1:
        raise ValueError("shards and workers must be >= 1")
    t0 = time.perf_counter()
    g = c.geometry
    codes = c.codes()
    mult = multiples_table(codes, g)
    span = g.code_span
    width = -(-span // shards)
    windows = [(lo, min(span, lo + width)) for lo in range(0, span, width)]
    workers = min(workers, len(windows))

    def run_window(window: tuple[int, int]) -> tuple[int, int, np.ndarray]:
        cov = CoverageMap(g, window[0], window[1])
        pairs, landed = mark_pair_secants(cov, mult, codes)
        covered = _scan_window(cov, g)
        cov.release()
        return pairs, landed, covered

    covered = np.zeros(g.point_count, dtype=bool)
    pairs = c.n * (c.n - 1) // 2
    marks = 0
    if workers == 1:
        for w in windows:
            wp, landed, cov_w = run_window(w)
            assert wp == pairs
            marks += landed
            covered |= cov_w
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            for wp, landed, cov_w in pool.map(run_window, windows):
                assert wp == pairs
                marks += landed
                covered |= cov_w
    uncovered = _strip_cap_points(np.flatnonzero(~covered), c)
    peak = workers * (-(-width // 8))
    return _finish(c, uncovered, pairs, marks, "fast", shards, peak, t0)


def check_fast(c: Cap) -> CompletenessReport:
    """The normalization-free checker over the full code range."""
    return _check_marking(c, 1, 1)


def check_split(c: Cap, shards: int, workers: int = 1) -> CompletenessReport:
    """Fast checker replayed per window; same report for any (shards, workers)."""
    return _check_marking(c, shards, workers)


# ---------------------------------------------------------------------------
# normalizing baseline
# ---------------------------------------------------------------------------


def check_naive(c: Cap) -> CompletenessReport:
    """Baseline: normalize every generated point, mark normalized codes."""
    _require_checkable(c)
    t0 = time.perf_counter()
    g = c.geometry
    codes = list(c.points)
    n = c.n
    rows = [[scalar_mul_point(a, p, g) for a in g.field.nonzero_elements()] for p in codes]
    covered = bytearray(g.point_count)
    for i in range(n):
        row_i = rows[i]
        for j in range(i + 1, n):
            cj = codes[j]
            for ai in row_i:
                covered[index_of_point(normalize(ai ^ cj, g), g)] = 1
    capset = set(codes)
    uncovered = np.array(
        [
            p
            for idx, p in enumerate(enumerate_points(g))
            if not covered[idx] and p not in capset
        ],
        dtype=np.uint64,
    )
    pairs = n * (n - 1) // 2
    return _finish(c, uncovered, pairs, pairs * (g.q - 1), "naive", 1, g.point_count, t0)


# ---------------------------------------------------------------------------
# definition-level oracle
# ---------------------------------------------------------------------------


def check_oracle(c: Cap) -> CompletenessReport:
    """Point-by-point application of the covering definition.

    A point is covered when one of the lines joining it to a cap point
    passes through a second cap point.  Quadratic per point and happily
    so; restricted to geometries with at most ORACLE_POINT_LIMIT points.
    """
    _require_checkable(c)
    g = c.geometry
    if g.point_count > ORACLE_POINT_LIMIT:
        raise GeometryTooLargeError(
            f"{g.label} has {g.point_count} points; oracle limit is {ORACLE_POINT_LIMIT}"
        )
    t0 = time.perf_counter()
    capset = set(c.points)
    nonzero = list(g.field.nonzero_elements())
    uncovered = []
    for qpt in enumerate_points(g):
        if qpt in capset:
            continue
        reps = [scalar_mul_point(a, qpt, g) for a in nonzero]
        covered = False
        for p in c.points:
            for rep in reps:
                if normalize(rep ^ p, g) in capset:
                    covered = True
                    break
            if covered:
                break
        if not covered:
            uncovered.append(qpt)
    return _finish(c, np.array(uncovered, dtype=np.uint64), 0, 0, "oracle", 1, 0, t0)


# ---------------------------------------------------------------------------


def reports_agree(a: CompletenessReport, b: CompletenessReport) -> bool:
    """Same verdict and the same uncovered set."""
    return bool(a.complete == b.complete and np.array_equal(a.uncovered, b.uncovered))
