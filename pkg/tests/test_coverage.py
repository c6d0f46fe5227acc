"""Bit-map marking engine: windows, counting, and the pair loop."""

from __future__ import annotations

import numpy as np
import pytest

from capcheck import Cap, CoverageMap, Geometry, GeometryTooLargeError, normalize
from capcheck.coverage import covered_codes, mark_pair_secants, multiples_table
import capcheck.coverage as coverage_mod

PG24 = Geometry(2, 4)


def test_mark_and_get_scalar():
    cov = CoverageMap(PG24)
    assert not cov.get(17)
    cov.mark(17)
    assert cov.get(17)
    assert not cov.get(16)


def test_window_filters_marks():
    cov = CoverageMap(PG24, lo=16, hi=32)
    codes = np.array([1, 16, 31, 32, 63], dtype=np.uint64)
    assert cov.mark_codes(codes) == 2  # only 16 and 31 land
    got = cov.test_codes(codes)
    assert got.tolist() == [False, True, True, False, False]
    assert not cov.get(1)  # out-of-window reads are False
    assert cov.get(16) and cov.get(31)


def test_full_span_flag():
    assert CoverageMap(PG24).is_full_span
    assert not CoverageMap(PG24, lo=0, hi=32).is_full_span


def test_memory_bound_enforced():
    g = Geometry(12, 4)
    with pytest.raises(GeometryTooLargeError):
        CoverageMap(g, max_bytes=1024)
    CoverageMap(g, lo=0, hi=8192, max_bytes=1024)  # a window that fits


def test_multiples_table_shape(hyperoval):
    t = multiples_table(hyperoval.codes(), PG24)
    assert t.shape == (6, 3)
    assert t.size == 18  # n(q-1)
    assert t[:, 0].tolist() == list(hyperoval.points)  # alpha=1 column
    for i, p in enumerate(hyperoval.points):
        for code in t[i]:
            assert normalize(int(code), PG24) == p


def test_multiples_table_gf2_degenerates():
    g = Geometry(2, 2)
    c = Cap(g, (1, 2, 4))
    t = multiples_table(c.codes(), g)
    assert t.shape == (3, 1)
    assert t[:, 0].tolist() == [1, 2, 4]


def test_pair_secants_counts(hyperoval):
    cov = CoverageMap(PG24)
    t = multiples_table(hyperoval.codes(), PG24)
    pairs, landed = mark_pair_secants(cov, t, hyperoval.codes())
    assert pairs == 15  # n(n-1)/2
    assert landed == 45  # (q-1) * pairs, nothing outside a full-span window


def test_pair_secants_marks_expected_codes(frame3):
    cov = CoverageMap(PG24)
    t = multiples_table(frame3.codes(), PG24)
    mark_pair_secants(cov, t, frame3.codes())
    expected = set()
    for i, p in enumerate(frame3.points):
        for q_ in frame3.points[i + 1 :]:
            for alpha in (1, 2, 3):
                from capcheck import scalar_mul_point

                expected.add(scalar_mul_point(alpha, p, PG24) ^ q_)
    for code in range(64):
        assert cov.get(code) == (code in expected)


def test_windowed_marks_partition_exactly(hyperoval):
    """Each mark lands in exactly one window of a partition."""
    t = multiples_table(hyperoval.codes(), PG24)
    full = CoverageMap(PG24)
    _, total = mark_pair_secants(full, t, hyperoval.codes())
    landed_sum = 0
    for lo in range(0, 64, 16):
        cov = CoverageMap(PG24, lo=lo, hi=lo + 16)
        _, landed = mark_pair_secants(cov, t, hyperoval.codes())
        landed_sum += landed
        for code in range(lo, lo + 16):
            assert cov.get(code) == full.get(code)
    assert landed_sum == total


def test_blocked_path_matches_oneshot(monkeypatch, hyperoval):
    t = multiples_table(hyperoval.codes(), PG24)
    reference = CoverageMap(PG24)
    mark_pair_secants(reference, t, hyperoval.codes())
    monkeypatch.setattr(coverage_mod, "_ONESHOT_LIMIT", 4)
    blocked = CoverageMap(PG24)
    pairs, landed = mark_pair_secants(blocked, t, hyperoval.codes())
    assert pairs == 15 and landed == 45
    assert np.array_equal(blocked._bits, reference._bits)


def test_covered_codes_oracle(frame4):
    cov = CoverageMap(PG24)
    t = multiples_table(frame4.codes(), PG24)
    mark_pair_secants(cov, t, frame4.codes())
    from capcheck import enumerate_points, scalar_mul_point

    pts = np.array(list(enumerate_points(PG24)), dtype=np.uint64)
    got = covered_codes(cov, pts, PG24)
    for p, flag in zip(pts, got):
        reps_marked = any(
            cov.get(scalar_mul_point(a, int(p), PG24)) for a in (1, 2, 3)
        )
        assert bool(flag) == reps_marked


def test_release_frees_window():
    cov = CoverageMap(PG24)
    cov.mark(5)
    cov.release()
    assert cov._bits.size == 0
