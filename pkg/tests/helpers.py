"""Shared randomized generators for the test suite."""

import numpy as np

from boolfun import BooleanFunction, LtfSpec


def random_function(n: int, rng) -> BooleanFunction:
    nbytes = ((1 << n) + 7) // 8
    raw = rng.integers(0, 256, size=nbytes, dtype=np.uint8).tobytes()
    return BooleanFunction(n, int.from_bytes(raw, "little") & ((1 << (1 << n)) - 1))


def random_odd_function(n: int, rng) -> BooleanFunction:
    """Uniform over functions with f(-x) = -f(x).

    The complement pairing (j, 2^n - 1 - j) splits the cube into pairs whose
    first element has the top bit clear, so the free half determines the rest.
    """
    half = 1 << (n - 1)
    top = rng.choice(np.array([-1, 1], dtype=np.int8), size=half)
    signs = np.concatenate([top, -top[::-1]])
    return BooleanFunction.from_signs(signs)


def random_monotone_spec(n: int, rng, max_weight: int = 7) -> LtfSpec:
    """Positive weights with odd total: tie-free at threshold 0, monotone."""
    w = [int(x) for x in rng.integers(1, max_weight + 1, size=n)]
    if sum(w) % 2 == 0:
        w[0] += 1
    return LtfSpec(tuple(w))


def negate_subset(f: BooleanFunction, mask: int) -> BooleanFunction:
    """g(x) = f(x with the coordinates in ``mask`` negated)."""
    idx = np.arange(f.size)
    return BooleanFunction.from_signs(f.signs()[idx ^ mask])


def mask_image(mask: int, perm) -> int:
    """Image of a subset mask under the coordinate relabeling i -> perm[i-1]."""
    out = 0
    for i, target in enumerate(perm, start=1):
        if (mask >> (i - 1)) & 1:
            out |= 1 << (target - 1)
    return out
