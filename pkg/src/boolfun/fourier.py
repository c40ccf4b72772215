"""Exact Walsh-Hadamard spectra: coefficients, influences, degree weights, stability.

Scaling convention: an expansion stores the integers 2^n * fhat(S) indexed by
subset mask S, where fhat(S) = 2^-n sum_x f(x) chi_S(x) and chi_S(x) is the
product of the coordinates in S. Division happens only at the reporting
boundary, so every published value is an exact Fraction in lowest terms.

With arity capped at 24, every butterfly partial sum is bounded by 2^24 and
every sum of squared scaled coefficients by 4^24 (Parseval), both far inside
int64 range, so the numpy fast paths are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .core import ORACLE_MAX_ARITY, BooleanFunction

__all__ = [
    "FourierExpansion",
    "StabilityPolynomial",
    "character_matrix",
    "coefficient",
    "correlation_by_distance",
    "degree_weight",
    "influence",
    "influence_from_spectrum",
    "inverse_wht",
    "naive_expansion",
    "stability_oracle",
    "stability_polynomial",
    "wht",
]


@dataclass(frozen=True, eq=False)
class FourierExpansion:
    """All 2^n scaled Fourier coefficients of a +-1 valued function."""

    n: int
    scaled: np.ndarray  # int64; scaled[S] = 2^n * fhat(S)

    def __post_init__(self):
        if self.scaled.shape != (1 << self.n,):
            raise ValueError("coefficient vector length must be 2^n")
        self.scaled.setflags(write=False)

    @property
    def size(self) -> int:
        return 1 << self.n


@dataclass(frozen=True)
class StabilityPolynomial:
    """Degree weights W_0..W_n viewed as the polynomial sum_k W_k rho^k."""

    weights: tuple[Fraction, ...]

    @property
    def degree(self) -> int:
        return len(self.weights) - 1

    def evaluate(self, rho) -> Fraction:
        """Exact Horner evaluation at rational rho.

        Values outside [0, 1] are allowed; they fall outside the noise
        interpretation and reporting layers flag them as such.
        """
        rho = Fraction(rho)
        acc = Fraction(0)
        for w in reversed(self.weights):
            acc = acc * rho + w
        return acc


def _forward_butterfly(vec: np.ndarray) -> None:
    """In-place pass turning a sign table into scaled coefficients.

    The stage for bit b maps pairs (x, y) = (bit clear, bit set) to
    (x + y, y - x); the sign asymmetry is forced by the encoding that puts
    x_i = +1 on set bits, where the textbook (x + y, x - y) butterfly would
    compute the chi of the complemented input instead.
    """
    size = vec.size
    h = 1
    while h < size:
        m = vec.reshape(-1, 2, h)
        x = m[:, 0, :].copy()
        m[:, 0, :] = x + m[:, 1, :]
        m[:, 1, :] -= x
        h *= 2


def _inverse_butterfly(vec: np.ndarray) -> None:
    """Exact inverse of the forward pass, up to the overall factor 2^n."""
    size = vec.size
    h = 1
    while h < size:
        m = vec.reshape(-1, 2, h)
        x = m[:, 0, :].copy()
        m[:, 0, :] = x - m[:, 1, :]
        m[:, 1, :] += x
        h *= 2


def wht(f: BooleanFunction) -> FourierExpansion:
    """Full spectrum by the fast transform, n * 2^n integer operations."""
    vec = f.signs().astype(np.int64)
    _forward_butterfly(vec)
    return FourierExpansion(f.n, vec)


def inverse_wht(e: FourierExpansion) -> BooleanFunction:
    """Recover the +-1 table from scaled coefficients, exactly."""
    vec = e.scaled.astype(np.int64)
    _inverse_butterfly(vec)
    quotient, remainder = np.divmod(vec, e.size)
    if remainder.any() or not np.all(np.abs(quotient) == 1):
        raise ValueError("coefficients are not the spectrum of a +-1 valued function")
    return BooleanFunction.from_signs(quotient)


@lru_cache(maxsize=None)
def character_matrix(n: int) -> np.ndarray:
    """The 2^n x 2^n matrix M[S, j] = chi_S(j), by Kronecker doubling.

    Independent reference path for the fast transform; capped at the oracle
    arity because it costs 4^n memory.
    """
    if not 1 <= n <= ORACLE_MAX_ARITY:
        raise ValueError(f"character matrix arity must be in 1..{ORACLE_MAX_ARITY}")
    base = np.array([[1, 1], [-1, 1]], dtype=np.int64)  # rows: S = {}, {i}
    m = np.array([[1]], dtype=np.int64)
    for _ in range(n):
        m = np.kron(base, m)  # new coordinate takes the high bit of S and j
    m.setflags(write=False)
    return m


def naive_expansion(f: BooleanFunction) -> FourierExpansion:
    """Spectrum by direct summation: scaled[S] = sum_j f(j) chi_S(j), O(4^n)."""
    if f.n > ORACLE_MAX_ARITY:
        raise ValueError(f"naive summation capped at arity {ORACLE_MAX_ARITY}")
    scaled = character_matrix(f.n) @ f.signs().astype(np.int64)
    return FourierExpansion(f.n, scaled)


def coefficient(e: FourierExpansion, subset_mask: int) -> Fraction:
    """fhat(S) in lowest terms for the subset with the given bit mask."""
    if not 0 <= subset_mask < e.size:
        raise IndexError(f"subset mask {subset_mask} out of range for arity {e.n}")
    return Fraction(int(e.scaled[subset_mask]), e.size)


def influence(f: BooleanFunction, i: int) -> Fraction:
    """Inf_i[f] = Pr_x[f(x) != f(x with coordinate i flipped)], exact.

    Counts disagreements by XORing the packed table against its own
    coordinate-i flip; one popcount gives the count over all inputs.
    """
    if not 1 <= i <= f.n:
        raise ValueError(f"coordinate {i} out of range 1..{f.n}")
    stride = 1 << (i - 1)
    period = 2 * stride
    unit = (1 << stride) - 1
    m = unit * (((1 << f.size) - 1) // ((1 << period) - 1))
    flipped = ((f.table >> stride) & m) | ((f.table & m) << stride)
    return Fraction((f.table ^ flipped).bit_count(), f.size)


def _popcounts(size: int) -> np.ndarray:
    return np.bitwise_count(np.arange(size, dtype=np.uint32))


def influence_from_spectrum(e: FourierExpansion, i: int) -> Fraction:
    """Inf_i via the identity sum over S containing i of fhat(S)^2."""
    if not 1 <= i <= e.n:
        raise ValueError(f"coordinate {i} out of range 1..{e.n}")
    has_i = (np.arange(e.size) >> (i - 1)) & 1 == 1
    total = int(np.sum(e.scaled[has_i] ** 2))  # bounded by 4^n, exact in int64
    return Fraction(total, e.size * e.size)


def degree_weight(e: FourierExpansion, k: int) -> Fraction:
    """W_k = sum over |S| = k of fhat(S)^2, exact."""
    if not 0 <= k <= e.n:
        raise ValueError(f"degree {k} out of range 0..{e.n}")
    at_level = _popcounts(e.size) == k
    total = int(np.sum(e.scaled[at_level] ** 2))
    return Fraction(total, e.size * e.size)


def stability_polynomial(e: FourierExpansion) -> StabilityPolynomial:
    """The full weight vector W_0..W_n; the weights sum to 1 by Parseval."""
    levels = _popcounts(e.size)
    squares = e.scaled.astype(np.int64) ** 2
    denom = e.size * e.size
    weights = tuple(
        Fraction(int(np.sum(squares[levels == k])), denom) for k in range(e.n + 1)
    )
    return StabilityPolynomial(weights)


def correlation_by_distance(f: BooleanFunction, g: BooleanFunction) -> list[int]:
    """C[d] = sum over input pairs at Hamming distance d of f(x) g(y)."""
    if f.n != g.n:
        raise ValueError(f"arity mismatch: {f.n} vs {g.n}")
    if f.n > ORACLE_MAX_ARITY:
        raise ValueError(f"pair summation capped at arity {ORACLE_MAX_ARITY}")
    sf = f.signs().astype(np.int64)
    sg = g.signs().astype(np.int64)
    idx = np.arange(f.size)
    counts = [0] * (f.n + 1)
    for z in range(f.size):
        counts[z.bit_count()] += int(sf @ sg[idx ^ z])
    return counts


def stability_oracle(f: BooleanFunction, g: BooleanFunction, rho) -> Fraction:
    """E[f(x) g(y)] over rho-correlated pairs, by the direct double sum.

    y_i independently agrees with x_i with probability (1 + rho)/2, so a pair
    at Hamming distance d carries weight ((1+rho)/2)^(n-d) ((1-rho)/2)^d.
    Exact for rational rho; independent of the Fourier route, so it serves
    as the cross-check that Stab_rho equals sum_k W_k rho^k.
    """
    rho = Fraction(rho)
    agree = (1 + rho) / 2
    disagree = (1 - rho) / 2
    counts = correlation_by_distance(f, g)
    total = sum(
        c * agree ** (f.n - d) * disagree**d for d, c in enumerate(counts)
    )
    return total / f.size
