"""Bit-packed truth tables and index conventions for functions on {-1,+1}^n.

Input encoding: index j in [0, 2^n) decodes to the point with x_i = +1
exactly when bit (i-1) of j is set, a bijection between indices and the
hypercube. Truth tables pack one bit per input: bit j of ``table`` is set
exactly when f(j) = +1, so a popcount of the table counts the +1 outputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

# Full-table work is capped so a table is at most 2^24 bits (2 MiB) and
# every Walsh-Hadamard partial sum stays far inside int64 range.
MAX_ARITY = 24
# Quadratic-cost (4^n) reference oracles get a tighter cap.
ORACLE_MAX_ARITY = 10

__all__ = [
    "MAX_ARITY",
    "ORACLE_MAX_ARITY",
    "BooleanFunction",
    "complement_index",
    "flip_coordinate",
    "index_to_signs",
    "signs_to_index",
]


def _check_arity(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"arity must be a positive integer, got {n!r}")
    if n > MAX_ARITY:
        raise ValueError(f"arity {n} exceeds the exact full-table cap of {MAX_ARITY}")


def _check_index(j: int, n: int) -> None:
    if not 0 <= j < (1 << n):
        raise IndexError(f"input index {j} out of range for arity {n}")


def index_to_signs(j: int, n: int) -> tuple[int, ...]:
    """Decode index j to its point (x_1, ..., x_n) with entries +-1."""
    _check_arity(n)
    _check_index(j, n)
    return tuple(1 if (j >> i) & 1 else -1 for i in range(n))


def signs_to_index(signs) -> int:
    """Encode a +-1 point back to its input index."""
    j = 0
    for i, x in enumerate(signs):
        if x == 1:
            j |= 1 << i
        elif x != -1:
            raise ValueError(f"coordinate values must be +-1, got {x!r}")
    return j


def flip_coordinate(j: int, i: int, n: int) -> int:
    """Toggle coordinate i (1-based) of input index j. Involutive."""
    _check_arity(n)
    _check_index(j, n)
    if not 1 <= i <= n:
        raise ValueError(f"coordinate {i} out of range 1..{n}")
    return j ^ (1 << (i - 1))


def complement_index(j: int, n: int) -> int:
    """Index of -x, the point with every coordinate of j negated."""
    _check_arity(n)
    _check_index(j, n)
    return j ^ ((1 << n) - 1)


@dataclass(frozen=True)
class BooleanFunction:
    """A +-1 valued function on {-1,+1}^n held as a packed 2^n-bit table.

    ``table`` is a nonnegative int whose bit j is set iff f(j) = +1; bits at
    or above 2^n must be zero. Instances are immutable and hashable, and all
    operations below are pure, so unrestricted concurrent reads are safe.
    """

    n: int
    table: int

    def __post_init__(self):
        _check_arity(self.n)
        if not isinstance(self.table, int) or self.table < 0:
            raise ValueError("table must be a nonnegative integer bit mask")
        if self.table >> self.size:
            raise ValueError(f"table has bits beyond the {self.size} valid positions")

    @property
    def size(self) -> int:
        return 1 << self.n

    @classmethod
    def from_signs(cls, signs) -> "BooleanFunction":
        """Build from a length-2^n sequence of +-1 values indexed by j."""
        vec = np.asarray(signs)
        size = vec.size
        if size < 2 or size & (size - 1):
            raise ValueError(f"sign vector length {size} is not a power of two >= 2")
        if not np.all(np.abs(vec) == 1):
            raise ValueError("sign vector entries must be +-1")
        n = size.bit_length() - 1
        _check_arity(n)
        bits = (vec == 1).astype(np.uint8)
        packed = np.packbits(bits, bitorder="little").tobytes()
        return cls(n, int.from_bytes(packed, "little"))

    @classmethod
    def from_hex(cls, n: int, text: str) -> "BooleanFunction":
        """Parse the hex text form (little-endian bytes, bit 0 = input 0)."""
        _check_arity(n)
        nbytes = ((1 << n) + 7) // 8
        raw = bytes.fromhex(text)
        if len(raw) != nbytes:
            raise ValueError(f"expected {nbytes} table bytes for arity {n}, got {len(raw)}")
        return cls(n, int.from_bytes(raw, "little"))

    def to_hex(self) -> str:
        """Lowercase hex of the packed table, bytes in increasing-j order."""
        nbytes = (self.size + 7) // 8
        return self.table.to_bytes(nbytes, "little").hex()

    def evaluate(self, j: int) -> int:
        """The stored sign (+1 or -1) at input index j."""
        _check_index(j, self.n)
        return 1 if (self.table >> j) & 1 else -1

    def signs(self) -> np.ndarray:
        """The full table as an int8 array of +-1, indexed by j."""
        nbytes = (self.size + 7) // 8
        raw = np.frombuffer(self.table.to_bytes(nbytes, "little"), dtype=np.uint8)
        bits = np.unpackbits(raw, bitorder="little", count=self.size)
        return bits.astype(np.int8) * 2 - 1

    def ones(self) -> int:
        """Number of inputs mapped to +1."""
        return self.table.bit_count()

    def bias(self) -> Fraction:
        """E[f] over uniform inputs, exact."""
        return Fraction(2 * self.ones() - self.size, self.size)

    def negate_inputs(self) -> "BooleanFunction":
        """The function g(x) = f(-x). Involutive."""
        # -x is the complement index, so the unpacked table simply reverses.
        return BooleanFunction.from_signs(self.signs()[::-1])

    def permute_coordinates(self, perm) -> "BooleanFunction":
        """The function g(x) = f(x_perm(1), ..., x_perm(n)).

        ``perm`` is a 1-based permutation of 1..n. Applying sigma then pi
        equals applying the single composite i -> pi(sigma(i)).
        """
        p = tuple(perm)
        if sorted(p) != list(range(1, self.n + 1)):
            raise ValueError(f"malformed permutation {perm!r} for arity {self.n}")
        idx = np.arange(self.size, dtype=np.int64)
        src = np.zeros_like(idx)
        for i, target in enumerate(p):
            src |= ((idx >> (target - 1)) & 1) << i
        return BooleanFunction.from_signs(self.signs()[src])
