"""Caps: ordered sets of normalized points with no three collinear.

File formats
------------
text:    one point per line, r+1 coordinates (integer encodings in
         [0, q-1]) separated by single spaces, x0 first
packed:  one lowercase hex code per line (the packed value of the
         normalized representative)

Either format may start with a header comment  # PG(r,q)  which is
checked against the geometry the caller supplies.  Input points are
normalized on parse; two lines landing on the same projective point are
an error, not a merge.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from .coverage import CoverageMap, covered_codes, mark_pair_secants, multiples_table
from .errors import (
    BadCoordinateError,
    CapTooLargeError,
    DuplicatePointError,
    GeometryMismatchError,
    GeometryTooLargeError,
    InvalidCapError,
    OutOfRangeError,
    WrongArityError,
    ZeroVectorError,
)
from .geometry import (
    Geometry,
    decode_point,
    encode_point,
    is_normalized,
    normalize,
    points_by_index,
    scalar_mul_point,
)

_HEADER_RE = re.compile(r"#\s*PG\(\s*(\d+)\s*,\s*(\d+)\s*\)")


@dataclass(frozen=True)
class Cap:
    """An ordered, duplicate-free set of normalized point codes.

    The no-three-collinear property is not checked on construction;
    call validate_cap for that.
    """

    geometry: Geometry
    points: tuple[int, ...]

    def __post_init__(self) -> None:
        g = self.geometry
        seen = set()
        for code in self.points:
            if code == 0:
                raise ZeroVectorError("cap contains the zero vector")
            if code >= g.code_span:
                raise OutOfRangeError(f"code {code} outside [1, {g.code_span})")
            if not is_normalized(code, g):
                raise BadCoordinateError(f"cap code {code:#x} is not normalized")
            if code in seen:
                raise DuplicatePointError(f"duplicate point {code:#x}")
            seen.add(code)
        if len(self.points) > g.point_count:
            raise CapTooLargeError(
                f"{len(self.points)} points in a geometry of {g.point_count}"
            )

    @property
    def n(self) -> int:
        return len(self.points)

    def codes(self) -> np.ndarray:
        if self.geometry.code_bits > 64:
            raise GeometryTooLargeError(
                f"{self.geometry.label} codes do not fit one machine word"
            )
        return np.array(self.points, dtype=np.uint64)

    def coordinates(self) -> list[list[int]]:
        return [decode_point(p, self.geometry) for p in self.points]

    def __iter__(self) -> Iterator[int]:
        return iter(self.points)

    def __len__(self) -> int:
        return len(self.points)


@dataclass(frozen=True)
class CapViolation:
    """Witness for a failed cap check: three collinear cap points, ascending."""

    triple: tuple[int, int, int]

    def __str__(self) -> str:
        a, b, c = self.triple
        return f"collinear points {a:#x}, {b:#x}, {c:#x}"


# ---------------------------------------------------------------------------
# parsing / writing
# ---------------------------------------------------------------------------


def parse_cap(data: str | bytes, g: Geometry) -> Cap:
    """Parse a cap file in either format; see the module docstring."""
    if isinstance(data, bytes):
        data = data.decode("ascii")
    points: list[int] = []
    seen: dict[int, int] = {}
    packed: bool | None = None  # decided by the first data line
    for lineno, raw in enumerate(data.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            m = _HEADER_RE.match(line)
            if m and (int(m.group(1)), int(m.group(2))) != (g.r, g.q):
                raise GeometryMismatchError(
                    f"line {lineno}: header says PG({m.group(1)},{m.group(2)}), "
                    f"expected {g.label}"
                )
            continue
        tokens = line.split()
        if packed is None:
            packed = len(tokens) == 1
        if packed:
            if len(tokens) != 1:
                raise WrongArityError(f"line {lineno}: expected a single hex code")
            try:
                code = int(tokens[0], 16)
            except ValueError:
                raise BadCoordinateError(f"line {lineno}: bad hex code {tokens[0]!r}") from None
            if code == 0:
                raise ZeroVectorError(f"line {lineno}: code 0 is not a point")
            if code >= g.code_span:
                raise OutOfRangeError(f"line {lineno}: code {code:#x} out of range")
        else:
            if len(tokens) != g.r + 1:
                raise WrongArityError(
                    f"line {lineno}: expected {g.r + 1} coordinates, got {len(tokens)}"
                )
            try:
                coords = [int(t) for t in tokens]
            except ValueError:
                raise BadCoordinateError(f"line {lineno}: non-integer coordinate") from None
            for x in coords:
                if not 0 <= x < g.q:
                    raise BadCoordinateError(
                        f"line {lineno}: coordinate {x} outside [0, {g.q - 1}]"
                    )
            if not any(coords):
                raise ZeroVectorError(f"line {lineno}: zero vector")
            code = encode_point(coords, g)
        code = normalize(code, g)
        if code in seen:
            raise DuplicatePointError(
                f"line {lineno}: same projective point as line {seen[code]}"
            )
        seen[code] = lineno
        points.append(code)
    return Cap(g, tuple(points))


def write_cap(c: Cap, fmt: str = "text", header: bool = False) -> str:
    """Serialize a cap; round-trips through parse_cap bit-exactly."""
    lines = []
    if header:
        lines.append(f"# {c.geometry.label}")
    if fmt == "text":
        lines.extend(" ".join(map(str, coords)) for coords in c.coordinates())
    elif fmt == "packed":
        lines.extend(format(p, "x") for p in c.points)
    else:
        raise ValueError(f"unknown format {fmt!r}")
    return "".join(line + "\n" for line in lines)


# ---------------------------------------------------------------------------
# cap property validation
# ---------------------------------------------------------------------------


def validate_cap(c: Cap) -> CapViolation | None:
    """None if no three points are collinear, else one witness triple.

    Marks the q-1 interior points of every secant and looks for a cap
    point among the marks; quadratic in n, never cubic.
    """
    if c.n < 3:
        return None
    try:
        return _validate_vector(c)
    except GeometryTooLargeError:
        return _validate_scalar(c)


def _validate_vector(c: Cap) -> CapViolation | None:
    g = c.geometry
    codes = c.codes()
    cov = CoverageMap(g)
    mult = multiples_table(codes, g)
    mark_pair_secants(cov, mult, codes)
    hit = covered_codes(cov, codes, g)
    if not hit.any():
        return None
    t = int(np.flatnonzero(hit)[0])
    target_reps = mult[t]
    for i in range(c.n):
        block = mult[i][:, None] ^ codes[None, :]
        block[:, i] = 0  # a self-pair yields a multiple of P_i, not a secant mark
        where = np.argwhere(np.isin(block, target_reps))
        if where.size:
            j = int(where[0][1])
            a, b, d = sorted((c.points[i], c.points[j], c.points[t]))
            return CapViolation((a, b, d))
    raise AssertionError("covered cap point without a generating pair")


def _validate_scalar(c: Cap) -> CapViolation | None:
    # fallback for geometries whose raw span is too large to bit-map
    g = c.geometry
    marks: dict[int, tuple[int, int]] = {}
    for i, p in enumerate(c.points):
        for j in range(i + 1, c.n):
            pj = c.points[j]
            for alpha in g.field.nonzero_elements():
                marks.setdefault(scalar_mul_point(alpha, p, g) ^ pj, (i, j))
    for t, p in enumerate(c.points):
        for alpha in g.field.nonzero_elements():
            pair = marks.get(scalar_mul_point(alpha, p, g))
            if pair is not None:
                a, b, d = sorted((c.points[pair[0]], c.points[pair[1]], p))
                return CapViolation((a, b, d))
    return None


# ---------------------------------------------------------------------------
# greedy growth
# ---------------------------------------------------------------------------


def _lcg_chunks(m: int, seed: int, chunk: int = 1 << 16) -> Iterator[np.ndarray]:
    """Seeded pseudorandom permutation of range(m), in vector chunks.

    Full-period affine generator x -> a*x + c over the next power of
    two >= m, walking past out-of-range values.  Deterministic for a
    given (m, seed) regardless of chunk size.
    """
    bits = max(2, (m - 1).bit_length() if m > 1 else 1)
    big = 1 << bits
    rng = random.Random(seed)
    a = 4 * rng.randrange(big // 4) + 1
    cadd = 2 * rng.randrange(big // 2) + 1
    x = rng.randrange(big)
    size = min(chunk, big)
    # jump tables: x_(t+u) = aa[u] * x_t + cc[u]  (mod big)
    aa = [1] * (size + 1)
    cc = [0] * (size + 1)
    for u in range(size):
        aa[u + 1] = (aa[u] * a) % big
        cc[u + 1] = (cc[u] * a + cadd) % big
    aa_arr = np.array(aa[:-1], dtype=np.uint64)
    cc_arr = np.array(cc[:-1], dtype=np.uint64)
    mask = np.uint64(big - 1)
    remaining = big
    while remaining > 0:
        take = min(size, remaining)
        vals = (aa_arr[:take] * np.uint64(x) + cc_arr[:take]) & mask
        vals = vals[vals < m]
        if vals.size:
            yield vals
        x = (aa[take] * x + cc[take]) % big
        remaining -= take


def _grow_greedily(
    g: Geometry, start: Iterable[int], seed: int, limit: int | None = None
) -> list[int]:
    """Extend a cap by scanning candidates in seeded permutation order.

    A point is added exactly when it lies on no secant of the current
    cap, i.e. when none of its scalar multiples is marked.  One pass
    suffices: coverage only grows, so every skipped point stays covered.
    """
    pts = list(start)
    capset = set(pts)
    cov = CoverageMap(g)
    if len(pts) >= 2:
        arr = np.array(pts, dtype=np.uint64)
        mark_pair_secants(cov, multiples_table(arr, g), arr)
    if limit is not None and len(pts) >= limit:
        return pts
    nonzero = list(g.field.nonzero_elements())
    for idx in _lcg_chunks(g.point_count, seed):
        codes = points_by_index(idx, g)
        covered = covered_codes(cov, codes, g)
        if covered.all():
            continue
        for code in codes[~covered]:
            code = int(code)
            if code in capset:
                continue
            reps = [scalar_mul_point(alpha, code, g) for alpha in nonzero]
            if any(cov.get(rep) for rep in reps):  # bits may have moved within the chunk
                continue
            if pts:
                marks = np.array(reps, dtype=np.uint64)[:, None] ^ np.array(
                    pts, dtype=np.uint64
                )[None, :]
                cov.mark_codes(marks.ravel())
            pts.append(code)
            capset.add(code)
            if limit is not None and len(pts) >= limit:
                return pts
    return pts


def greedy_extend(c: Cap, order_seed: int) -> Cap:
    """Complete cap containing c, deterministic for a given (c, seed)."""
    witness = validate_cap(c)
    if witness is not None:
        raise InvalidCapError(str(witness))
    return Cap(c.geometry, tuple(_grow_greedily(c.geometry, c.points, order_seed)))


def random_cap(g: Geometry, size: int, seed: int) -> Cap:
    """Seed-determined cap of the requested size (smaller only if the
    greedy pass completes first)."""
    return Cap(g, tuple(_grow_greedily(g, (), seed, limit=size)))
