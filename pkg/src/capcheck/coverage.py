"""Coverage bit-maps over raw point codes, and the secant marking loop.

The map spans a window [lo, hi) of the raw code range [0, q^(r+1)) at
one bit per code, so the whole of PG(12,4) costs 4^13 bits = 8 MiB.
Marks outside the window are dropped; that is the entire splitting
story: replay the same marking loop once per window and only pay for
one window of bits at a time.

Codes reaching this module must fit in a uint64 (geometry enforces it).
"""

from __future__ import annotations

import numpy as np

from .errors import GeometryTooLargeError
from .geometry import Geometry, _require_vector_support, scalar_mul_codes

# refuse to allocate absurd coverage windows (2 GiB); split instead
DEFAULT_MAX_COVERAGE_BYTES = 1 << 31

_BIT = (np.uint8(1) << np.arange(8, dtype=np.uint8))

# one-shot pair marking below this many generated codes, per-point blocks above
_ONESHOT_LIMIT = 1 << 22


class CoverageMap:
    """Bit array over the raw codes in [lo, hi)."""

    __slots__ = ("geometry", "lo", "hi", "nbytes", "_bits")

    def __init__(
        self,
        g: Geometry,
        lo: int = 0,
        hi: int | None = None,
        max_bytes: int = DEFAULT_MAX_COVERAGE_BYTES,
    ):
        _require_vector_support(g)
        if hi is None:
            hi = g.code_span
        if not 0 <= lo < hi <= g.code_span:
            raise ValueError(f"bad window [{lo}, {hi}) for span {g.code_span}")
        nbytes = -(-(hi - lo) // 8)
        if nbytes > max_bytes:
            raise GeometryTooLargeError(
                f"coverage window needs {nbytes} bytes (> {max_bytes}); raise the shard count"
            )
        self.geometry = g
        self.lo = lo
        self.hi = hi
        self.nbytes = nbytes
        self._bits = np.zeros(nbytes, dtype=np.uint8)

    @property
    def is_full_span(self) -> bool:
        return self.lo == 0 and self.hi == self.geometry.code_span

    def mark_codes(self, codes: np.ndarray) -> int:
        """Set the bits of all in-window codes; returns how many landed."""
        if not self.is_full_span:
            codes = codes[(codes >= self.lo) & (codes < self.hi)]
            if self.lo:
                codes = codes - np.uint64(self.lo)
        idx = (codes >> np.uint64(3)).astype(np.intp)
        np.bitwise_or.at(self._bits, idx, _BIT[(codes & np.uint64(7)).astype(np.uint8)])
        return codes.size

    def test_codes(self, codes: np.ndarray) -> np.ndarray:
        """Bit values for an array of codes; out-of-window codes read as 0."""
        if self.is_full_span:
            rel = codes
            out = None
        else:
            inside = (codes >= self.lo) & (codes < self.hi)
            rel = (codes[inside] - np.uint64(self.lo)) if self.lo else codes[inside]
            out = inside
        bits = (
            self._bits[(rel >> np.uint64(3)).astype(np.intp)]
            >> (rel & np.uint64(7)).astype(np.uint8)
        ) & 1
        if out is None:
            return bits.astype(bool)
        result = np.zeros(codes.shape, dtype=bool)
        result[out] = bits
        return result

    def mark(self, code: int) -> None:
        if self.lo <= code < self.hi:
            rel = code - self.lo
            self._bits[rel >> 3] |= _BIT[rel & 7]

    def get(self, code: int) -> bool:
        if not self.lo <= code < self.hi:
            return False
        rel = code - self.lo
        return bool((self._bits[rel >> 3] >> (rel & 7)) & 1)

    def release(self) -> None:
        """Drop the backing array early (windows are short-lived in split runs)."""
        self._bits = np.zeros(0, dtype=np.uint8)


def multiples_table(codes: np.ndarray, g: Geometry) -> np.ndarray:
    """(n, q-1) array of scalar multiples: column j holds (j+1) * P_i.

    Column 0 (alpha = 1) is the cap code itself; every row normalizes
    back to its cap point.
    """
    _require_vector_support(g)
    codes = np.asarray(codes, dtype=np.uint64)
    out = np.empty((codes.size, g.q - 1), dtype=np.uint64)
    for alpha in g.field.nonzero_elements():
        out[:, alpha - 1] = scalar_mul_codes(alpha, codes, g)
    return out


def mark_pair_secants(cov: CoverageMap, mult: np.ndarray, codes: np.ndarray) -> tuple[int, int]:
    """Mark alpha*P_i + P_j for every pair i < j and every nonzero alpha.

    Returns (pairs processed, marks landed in the window).  Exactly
    (q-1) codes are generated per pair; nothing is normalized.
    """
    n = codes.size
    width = mult.shape[1]  # q - 1
    landed = 0
    if n * (n - 1) // 2 * width <= _ONESHOT_LIMIT:
        ii, jj = np.triu_indices(n, 1)
        if ii.size:
            landed = cov.mark_codes((mult[ii] ^ codes[jj, None]).ravel())
    else:
        for i in range(n - 1):
            block = mult[i][:, None] ^ codes[i + 1 :][None, :]
            landed += cov.mark_codes(block.ravel())
    return n * (n - 1) // 2, landed


def covered_codes(cov: CoverageMap, codes: np.ndarray, g: Geometry) -> np.ndarray:
    """For each code, whether any of its q-1 scalar multiples is marked."""
    covered = cov.test_codes(codes)
    for alpha in range(2, g.q):
        covered |= cov.test_codes(scalar_mul_codes(alpha, codes, g))
    return covered
