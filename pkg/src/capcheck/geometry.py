"""Packed integer representation of points of PG(r, 2^k).

A point with coordinates (x0, x1, ..., xr) over GF(2^k) is packed into
one integer with x0 in the most significant k-bit block:

    code = sum over i of x_i * (2^k)^(r-i)

Because field addition is XOR on the encodings, the sum of two points is
a single XOR of their codes.  Python integers are arbitrary precision,
so codes wider than one machine word need no special handling; numeric
comparison of codes coincides with most-significant-word-first
lexicographic order.  The numpy bulk helpers additionally require codes
to fit in 64 bits.

Normalized representative: the scalar multiple whose leftmost nonzero
coordinate is 1.  Normalized codes are exactly the minima of their
projective classes, and `enumerate_points` yields them in increasing
order without any normalization work.
"""

from __future__ import annotations

from typing import Iterator, Sequence

import numpy as np

from .errors import (
    BadCoordinateError,
    GeometryTooLargeError,
    OutOfRangeError,
    SamePointError,
    UnsupportedFieldError,
    WrongArityError,
    ZeroScalarError,
    ZeroVectorError,
)
from .field import TABLE_DEGREE, FieldTable, build_field

WORD_BITS = 64


class Geometry:
    """The projective space PG(r, 2^k) together with its field tables.

    Immutable; shareable between threads.
    """

    __slots__ = (
        "r",
        "k",
        "q",
        "field",
        "code_bits",
        "words_per_code",
        "code_span",
        "point_count",
        "_powers",
        "_cum",
        "_powers_arr",
        "_cum_arr",
    )

    def __init__(self, r: int, q: int, modulus: int | None = None):
        if r < 1:
            raise GeometryTooLargeError(f"projective dimension r={r} must be >= 1")
        k = q.bit_length() - 1
        if q < 2 or q != 1 << k:
            raise UnsupportedFieldError(f"field order q={q} is not a power of two")
        self.r = r
        self.k = k
        self.q = q
        self.field: FieldTable = build_field(k, modulus)
        self.code_bits = k * (r + 1)
        self.words_per_code = -(-self.code_bits // WORD_BITS)
        self.code_span = 1 << self.code_bits  # q^(r+1); valid codes are [1, span)
        self.point_count = (self.code_span - 1) // (q - 1)
        # q^d and the number of normalized codes below q^d, d = 0 .. r+1
        self._powers = [1 << (k * d) for d in range(r + 2)]
        self._cum = [(p - 1) // (q - 1) for p in self._powers]
        if self.code_bits <= WORD_BITS:
            self._powers_arr = np.array(self._powers, dtype=np.uint64)
            self._cum_arr = np.array(self._cum, dtype=np.uint64)
        else:
            self._powers_arr = None
            self._cum_arr = None

    @property
    def label(self) -> str:
        return f"PG({self.r},{self.q})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Geometry):
            return NotImplemented
        return (self.r, self.k, self.field.modulus) == (other.r, other.k, other.field.modulus)

    def __hash__(self) -> int:
        return hash((self.r, self.k, self.field.modulus))

    def __repr__(self) -> str:
        return f"Geometry(r={self.r}, q={self.q})"


# ---------------------------------------------------------------------------
# scalar point operations
# ---------------------------------------------------------------------------


def encode_point(coords: Sequence[int], g: Geometry) -> int:
    """Pack r+1 field elements into a point code (x0 most significant)."""
    if len(coords) != g.r + 1:
        raise WrongArityError(f"expected {g.r + 1} coordinates, got {len(coords)}")
    code = 0
    for x in coords:
        if not 0 <= x < g.q:
            raise BadCoordinateError(f"coordinate {x} outside [0, {g.q - 1}]")
        code = (code << g.k) | x
    if code == 0:
        raise ZeroVectorError("the zero vector is not a projective point")
    return code


def decode_point(code: int, g: Geometry) -> list[int]:
    """Unpack a code into its r+1 coordinates."""
    if code == 0:
        raise ZeroVectorError("code 0 is not a point")
    if not 0 < code < g.code_span:
        raise OutOfRangeError(f"code {code} outside [1, {g.code_span})")
    mask = g.q - 1
    return [(code >> (g.k * (g.r - i))) & mask for i in range(g.r + 1)]


def add_points(a: int, b: int) -> int:
    """Sum of two points: XOR of the codes.

    Returns 0 (the zero-vector signal, not a valid point) when a == b.
    """
    return a ^ b


def scalar_mul_point(alpha: int, code: int, g: Geometry) -> int:
    """Coordinate-wise product of a point by a nonzero scalar."""
    if alpha == 0:
        raise ZeroScalarError("scalar multiple by 0")
    if code == 0:
        raise ZeroVectorError("scalar multiple of the zero vector")
    if alpha == 1:
        return code
    mul = g.field.mul
    mask = g.q - 1
    out = 0
    for shift in range(0, g.code_bits, g.k):
        block = (code >> shift) & mask
        if block:
            out |= mul(alpha, block) << shift
    return out


def leading_coefficient(code: int, g: Geometry) -> int:
    """Leftmost nonzero coordinate of the code."""
    if code == 0:
        raise ZeroVectorError("zero vector has no leading coefficient")
    # highest k-bit block that is occupied
    top_block = (code.bit_length() - 1) // g.k
    return (code >> (g.k * top_block)) & (g.q - 1)


def normalize(code: int, g: Geometry) -> int:
    """Representative with the leftmost nonzero coordinate equal to 1."""
    lead = leading_coefficient(code, g)
    if lead == 1:
        return code
    return scalar_mul_point(g.field.inv(lead), code, g)


def is_normalized(code: int, g: Geometry) -> bool:
    return code != 0 and leading_coefficient(code, g) == 1


def line_points(p1: int, p2: int, g: Geometry) -> list[int]:
    """All q+1 points of the line through two projectively distinct points.

    Returns [p1, p2] followed by alpha*p1 + p2 for each nonzero alpha.
    Codes are not normalized.
    """
    if normalize(p1, g) == normalize(p2, g):
        raise SamePointError(f"codes {p1} and {p2} are the same projective point")
    pts = [p1, p2]
    for alpha in g.field.nonzero_elements():
        pts.append(scalar_mul_point(alpha, p1, g) ^ p2)
    return pts


# ---------------------------------------------------------------------------
# enumeration of normalized codes
# ---------------------------------------------------------------------------


def enumerate_points(g: Geometry) -> Iterator[int]:
    """Yield all point_count normalized codes in strictly increasing order.

    Block d (d = 0 .. r) holds the codes with leading 1 in coordinate
    x_(r-d): exactly the integers q^d + s for s in [0, q^d).
    """
    for d in range(g.r + 1):
        base = g._powers[d]
        for s in range(base):
            yield base + s


def point_by_index(t: int, g: Geometry) -> int:
    """The t-th code of enumerate_points order, 0 <= t < point_count."""
    if not 0 <= t < g.point_count:
        raise OutOfRangeError(f"point index {t} outside [0, {g.point_count})")
    d = g.r
    while g._cum[d] > t:
        d -= 1
    return g._powers[d] + (t - g._cum[d])


def index_of_point(code: int, g: Geometry) -> int:
    """Inverse of point_by_index; code must be normalized."""
    if code == 0:
        raise ZeroVectorError("code 0 is not a point")
    if code >= g.code_span:
        raise OutOfRangeError(f"code {code} outside [1, {g.code_span})")
    d = (code.bit_length() - 1) // g.k
    base = g._powers[d]
    if code >= 2 * base:
        raise OutOfRangeError(f"code {code} is not normalized")
    return g._cum[d] + (code - base)


# ---------------------------------------------------------------------------
# numpy bulk helpers (codes must fit one 64-bit word)
# ---------------------------------------------------------------------------


def _require_vector_support(g: Geometry) -> None:
    if g.code_bits > WORD_BITS:
        raise GeometryTooLargeError(
            f"{g.label} needs {g.code_bits}-bit codes; bulk operations support <= {WORD_BITS}"
        )
    if g.k > TABLE_DEGREE:
        raise GeometryTooLargeError(
            f"bulk operations need a full product table (k <= {TABLE_DEGREE}), got k={g.k}"
        )


def scalar_mul_codes(
    alpha: int, codes: np.ndarray, g: Geometry, blocks: int | None = None
) -> np.ndarray:
    """Vectorized scalar_mul_point over a uint64 code array.

    `blocks` limits the work to the low-order coordinate blocks (used
    when the caller knows the higher blocks are zero).
    """
    _require_vector_support(g)
    if alpha == 0:
        raise ZeroScalarError("scalar multiple by 0")
    if alpha == 1:
        return codes.copy()
    if blocks is None:
        blocks = g.r + 1
    row = g.field.mul_array[alpha]
    mask = np.uint64(g.q - 1)
    out = np.zeros_like(codes)
    for b in range(blocks):
        shift = np.uint64(g.k * b)
        out |= row[(codes >> shift) & mask] << shift
    return out


def points_by_index(idx: np.ndarray, g: Geometry) -> np.ndarray:
    """Vectorized point_by_index over a uint64 index array."""
    _require_vector_support(g)
    d = np.searchsorted(g._cum_arr, idx, side="right") - 1
    return g._powers_arr[d] + (idx - g._cum_arr[d])
