"""GF(2^k) arithmetic on integer-encoded elements.

An element is a plain Python int in [0, 2^k - 1] whose binary digits are
the coefficients of a polynomial over GF(2): the polynomial p(x) is
encoded as p(2).  Addition is then bitwise XOR; multiplication is
carry-less polynomial multiplication reduced modulo a fixed irreducible
polynomial of degree k.

The default modulus for each k is the smallest irreducible polynomial of
degree k in this integer encoding:

    k=1: x             -> 2
    k=2: x^2+x+1       -> 7
    k=3: x^3+x+1       -> 11
    k=4: x^4+x+1       -> 19
    k=5: x^5+x^2+1     -> 37
    k=6: x^6+x+1       -> 67
    k=7: x^7+x+1       -> 131
    k=8: x^8+x^4+x^3+x+1 -> 283
    (and so on through k=16)

For k=2 this gives GF(4) = {0, 1, w, wb} encoded as {0, 1, 2, 3}, with
w^2 = wb, w*wb = 1 and wb = w+1.

For k <= 8 a full 2^k x 2^k product table is built eagerly and all
operations are table lookups; for larger k multiplication falls back to
carry-less multiply plus reduction and inverses use square-and-multiply.
A FieldTable is immutable after construction and safe to share between
threads.
"""

from __future__ import annotations

import numpy as np

from .errors import ReduciblePolynomialError, UnsupportedFieldError, ZeroInverseError

MAX_DEGREE = 16
TABLE_DEGREE = 8  # full product tables up to this k

# Smallest irreducible polynomial of degree k, integer-encoded.
DEFAULT_MODULI: dict[int, int] = {
    1: 2,
    2: 7,
    3: 11,
    4: 19,
    5: 37,
    6: 67,
    7: 131,
    8: 283,
    9: 515,
    10: 1033,
    11: 2053,
    12: 4105,
    13: 8219,
    14: 16417,
    15: 32771,
    16: 65579,
}


def _clmul(a: int, b: int) -> int:
    """Carry-less (polynomial) product of two integer-encoded polynomials."""
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def _pmod(a: int, m: int) -> int:
    """Remainder of the polynomial a modulo the polynomial m."""
    dm = m.bit_length()
    while a.bit_length() >= dm:
        a ^= m << (a.bit_length() - dm)
    return a


def is_irreducible(poly: int) -> bool:
    """True iff the integer-encoded polynomial has no nontrivial GF(2) factor."""
    degree = poly.bit_length() - 1
    if degree < 1:
        return False
    if degree == 1:
        return True
    # trial division by everything of degree 1 .. degree//2
    for f in range(2, 1 << (degree // 2 + 1)):
        if _pmod(poly, f) == 0:
            return False
    return True


class FieldTable:
    """GF(2^k) with precomputed operation tables.

    Use :func:`build_field` to construct one.  Elements are ints in
    [0, 2^k - 1]; the table never wraps them.
    """

    __slots__ = ("k", "modulus", "q", "_mul", "_inv", "_sq", "mul_array")

    def __init__(self, k: int, modulus: int):
        self.k = k
        self.modulus = modulus
        self.q = 1 << k
        if k <= TABLE_DEGREE:
            q = self.q
            rows = [[_pmod(_clmul(a, b), modulus) for b in range(q)] for a in range(q)]
            self._mul: list[list[int]] | None = rows
            self._sq: list[int] | None = [rows[a][a] for a in range(q)]
            inv = [0] * q
            for a in range(1, q):
                inv[a] = rows[a].index(1)
            self._inv: list[int] | None = inv
            self.mul_array: np.ndarray | None = np.array(rows, dtype=np.uint64)
        else:
            self._mul = None
            self._sq = None
            self._inv = None
            self.mul_array = None

    # -- core operations ------------------------------------------------

    @staticmethod
    def add(a: int, b: int) -> int:
        """Field addition: bitwise XOR of the encodings."""
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        if self._mul is not None:
            return self._mul[a][b]
        return _pmod(_clmul(a, b), self.modulus)

    def inv(self, a: int) -> int:
        """Multiplicative inverse; raises ZeroInverseError on 0."""
        if a == 0:
            raise ZeroInverseError("0 has no multiplicative inverse")
        if self._inv is not None:
            return self._inv[a]
        # a^(2^k - 2) by square and multiply
        result, base, e = 1, a, self.q - 2
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def square(self, a: int) -> int:
        if self._sq is not None:
            return self._sq[a]
        return self.mul(a, a)

    def conjugate(self, a: int) -> int:
        """GF(4) conjugation a -> a^2.  Only defined for k=2."""
        if self.k != 2:
            raise UnsupportedFieldError(f"conjugation needs GF(4), got GF(2^{self.k})")
        return self._sq[a]  # type: ignore[index]

    # -- helpers --------------------------------------------------------

    def elements(self) -> range:
        return range(self.q)

    def nonzero_elements(self) -> range:
        return range(1, self.q)

    def __repr__(self) -> str:
        return f"FieldTable(k={self.k}, modulus={self.modulus})"


def build_field(k: int, modulus: int | None = None) -> FieldTable:
    """Build GF(2^k) under the given (or default) irreducible modulus.

    Raises UnsupportedFieldError for k outside [1, 16] and
    ReduciblePolynomialError when the supplied modulus factors over
    GF(2) or has the wrong degree.
    """
    if not 1 <= k <= MAX_DEGREE:
        raise UnsupportedFieldError(f"extension degree k={k} outside [1, {MAX_DEGREE}]")
    if modulus is None:
        modulus = DEFAULT_MODULI[k]
    if modulus.bit_length() - 1 != k:
        raise ReduciblePolynomialError(
            f"modulus {modulus} has degree {modulus.bit_length() - 1}, expected {k}"
        )
    if not is_irreducible(modulus):
        raise ReduciblePolynomialError(f"modulus {modulus} is reducible over GF(2)")
    return FieldTable(k, modulus)
