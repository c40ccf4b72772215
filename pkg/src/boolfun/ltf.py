"""Linear threshold functions: integer-weight specs, majority, structural predicates.

An LTF spec is a weight vector (w_1, ..., w_n), an integer threshold theta
(default 0), and a tie policy. Materializing evaluates sign(w . x - theta)
over the whole cube. sign(0) is undefined, so the default policy rejects any
spec whose weighted sum ever hits theta; ``map_to_minus_one`` exists for
exploratory work and sends ties to -1, which is the strict rule f = +1 iff
w . x > theta.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from .core import MAX_ARITY, BooleanFunction, index_to_signs

TIE_REJECT = "reject"
TIE_TO_MINUS_ONE = "map_to_minus_one"

__all__ = [
    "TIE_REJECT",
    "TIE_TO_MINUS_ONE",
    "LtfSpec",
    "TieEncountered",
    "counterexample",
    "counterexample_spec",
    "is_monotone",
    "is_odd",
    "is_unbiased",
    "majority",
    "materialize",
    "parse_spec",
    "render_spec",
    "tie_witness",
]


class TieEncountered(ValueError):
    """Raised when a reject-policy spec has an input with w . x = theta."""

    def __init__(self, spec: "LtfSpec", index: int):
        self.spec = spec
        self.index = index
        self.signs = index_to_signs(index, len(spec.weights))
        rendered = "(" + ", ".join(f"{x:+d}" for x in self.signs) + ")"
        super().__init__(
            f"weighted sum equals threshold {spec.threshold} at x = {rendered} (index {index})"
        )


@dataclass(frozen=True)
class LtfSpec:
    """Integer weights plus threshold and tie policy."""

    weights: tuple[int, ...]
    threshold: int = 0
    tie_policy: str = TIE_REJECT

    def __post_init__(self):
        w = tuple(int(x) for x in self.weights)
        object.__setattr__(self, "weights", w)
        if not w:
            raise ValueError("weight vector must be nonempty")
        if len(w) > MAX_ARITY:
            raise ValueError(f"arity {len(w)} exceeds the cap of {MAX_ARITY}")
        if self.tie_policy not in (TIE_REJECT, TIE_TO_MINUS_ONE):
            raise ValueError(f"unknown tie policy {self.tie_policy!r}")

    @property
    def n(self) -> int:
        return len(self.weights)


_SPEC_RE = re.compile(r"^(?P<weights>[^@]+)(?:@(?P<theta>[+-]?\d+))?$")


def parse_spec(text: str, tie_policy: str = TIE_REJECT) -> LtfSpec:
    """Parse the text form: comma-separated weights, optional "@theta" suffix.

    Examples: "2,2,1,1,1" or "2,2,1,1,1@0" or "3,-1@-2".
    """
    m = _SPEC_RE.match(text.strip())
    if m is None:
        raise ValueError(f"cannot parse LTF spec {text!r}")
    try:
        weights = tuple(int(part.strip()) for part in m.group("weights").split(","))
    except ValueError:
        raise ValueError(f"cannot parse LTF spec {text!r}: weights must be integers") from None
    theta = int(m.group("theta")) if m.group("theta") is not None else 0
    return LtfSpec(weights, theta, tie_policy)


def render_spec(spec: LtfSpec) -> str:
    return ",".join(str(w) for w in spec.weights) + f"@{spec.threshold}"


def _weighted_sums(spec: LtfSpec) -> np.ndarray:
    """w . x for every input index, by doubling over coordinates.

    Coordinate i occupies bit (i-1), so appending a coordinate extends the
    array with the -w half (bit clear) followed by the +w half (bit set).
    Falls back to Python integers if |w|_1 could approach int64 limits.
    """
    bound = sum(abs(w) for w in spec.weights) + abs(spec.threshold)
    dtype = np.int64 if bound < 2**62 else object
    sums = np.zeros(1, dtype=dtype)
    for w in spec.weights:
        sums = np.concatenate([sums - w, sums + w])
    return sums


def tie_witness(spec: LtfSpec) -> int | None:
    """Smallest input index with w . x = theta, or None if tie-free."""
    hits = np.nonzero(_weighted_sums(spec) == spec.threshold)[0]
    return int(hits[0]) if hits.size else None


def materialize(spec: LtfSpec) -> BooleanFunction:
    """Truth table of sign(w . x - theta) under the spec's tie policy."""
    sums = _weighted_sums(spec)
    if spec.tie_policy == TIE_REJECT:
        hits = np.nonzero(sums == spec.threshold)[0]
        if hits.size:
            raise TieEncountered(spec, int(hits[0]))
    signs = np.where(sums > spec.threshold, 1, -1).astype(np.int8)
    return BooleanFunction.from_signs(signs)


def majority(n: int) -> BooleanFunction:
    """Maj_n: all-ones weights, threshold 0. Requires odd n (no ties then)."""
    if not isinstance(n, int) or n < 1 or n % 2 == 0:
        raise ValueError(f"majority needs a positive odd arity, got {n!r}")
    return materialize(LtfSpec((1,) * n))


# The bundled 5-variable function sign(2x1 + 2x2 + x3 + x4 + x5): an unbiased,
# monotone, odd LTF whose level-1 Fourier weight is 44/64, strictly below the
# 45/64 of Maj_5, so it is strictly less noise-stable than Maj_5 for small rho.
COUNTEREXAMPLE_WEIGHTS: tuple[int, ...] = (2, 2, 1, 1, 1)


def counterexample_spec() -> LtfSpec:
    return LtfSpec(COUNTEREXAMPLE_WEIGHTS)


def counterexample() -> BooleanFunction:
    """Materialize the bundled less-stable-than-majority function."""
    return materialize(counterexample_spec())


def _half_mask(size: int, stride: int) -> int:
    """Bit mask over [0, size) selecting indices whose ``stride`` bit is clear."""
    period = 2 * stride
    unit = (1 << stride) - 1
    repunit = ((1 << size) - 1) // ((1 << period) - 1)
    return unit * repunit


def is_unbiased(f: BooleanFunction) -> bool:
    """True iff exactly half the inputs map to +1 (E[f] = 0)."""
    return f.ones() * 2 == f.size


def is_odd(f: BooleanFunction) -> bool:
    """True iff f(-x) = -f(x) for every x."""
    mask = (1 << f.size) - 1
    return f.negate_inputs().table ^ f.table == mask


def is_monotone(f: BooleanFunction) -> bool:
    """True iff raising any coordinate from -1 to +1 never lowers f.

    Scans each coordinate's hypercube edges via packed-table shifts: a
    violation is an index pair (j, j + stride) valued (+1, -1).
    """
    for i in range(f.n):
        stride = 1 << i
        m = _half_mask(f.size, stride)
        low = f.table & m
        high = (f.table >> stride) & m
        if low & ~high:
            return False
    return True
