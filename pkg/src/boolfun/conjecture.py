"""Stability comparison against majority, exact verification, and weight search.

The driving fact: for unbiased functions the noise-stability curves of f and
Maj_n agree at rho = 0 and rho = 1, so near zero the comparison is decided by
the linear coefficients, the level-1 weights W_1. A candidate with
W_1[f] < W_1[Maj_n] is strictly less stable than majority for small rho.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import partial
from itertools import combinations_with_replacement

from .core import BooleanFunction
from .fourier import (
    StabilityPolynomial,
    coefficient,
    degree_weight,
    influence,
    stability_polynomial,
    wht,
)
from .ltf import (
    TIE_TO_MINUS_ONE,
    LtfSpec,
    counterexample,
    is_monotone,
    is_odd,
    is_unbiased,
    majority,
    materialize,
    tie_witness,
)

VERDICT_REFUTES = "refutes_at_small_rho"
VERDICT_CONSISTENT = "consistent"
VERDICT_INDETERMINATE = "indeterminate"

SEARCH_MAX_ARITY = 9

# Sign-change brackets are narrowed to this width; they localize roots of the
# difference polynomial, they do not prove isolation.
BRACKET_WIDTH = Fraction(1, 2**40)

__all__ = [
    "BRACKET_WIDTH",
    "SEARCH_MAX_ARITY",
    "VERDICT_CONSISTENT",
    "VERDICT_INDETERMINATE",
    "VERDICT_REFUTES",
    "ComparisonReport",
    "IdentityCheck",
    "SearchResult",
    "VerificationReport",
    "canonical_weight_vectors",
    "compare_stability",
    "crossover_scan",
    "search_counterexamples",
    "verify_counterexample",
]


def _eval_poly(coeffs, rho: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * rho + c
    return acc


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _refine_bracket(coeffs, lo, hi, lo_sign):
    """Bisect a strict sign change down to width <= 2^-40, exactly."""
    while hi - lo > BRACKET_WIDTH:
        mid = (lo + hi) / 2
        s = _sign(_eval_poly(coeffs, mid))
        if s == 0:
            return (mid, mid)
        if s == lo_sign:
            lo = mid
        else:
            hi = mid
    return (lo, hi)


def _sign_change_brackets(coeffs, samples):
    """Brackets for every sign change of the polynomial inside (0, 1).

    ``samples`` is the ascending list of (rho, value) pairs over [0, 1].
    Zero-valued samples carry no sign, so the scan compares consecutive
    nonzero signs and bisects each flip; a touch of zero with equal signs
    on both sides is a root but not a crossover and is not reported. If a
    bisection midpoint lands exactly on a root, the zero-width bracket
    marks that exact rational root, with opposite signs on either side.
    """
    nonzero = [(rho, _sign(val)) for rho, val in samples if val != 0]
    return [
        _refine_bracket(coeffs, r0, r1, s0)
        for (r0, s0), (r1, s1) in zip(nonzero, nonzero[1:])
        if s0 != s1
    ]


@dataclass(frozen=True)
class ComparisonReport:
    """Exact comparison of two stability curves, reference minus candidate."""

    arity: int
    poly_candidate: StabilityPolynomial
    poly_reference: StabilityPolynomial
    diff_poly: tuple[Fraction, ...]  # D(rho) = Stab[reference] - Stab[candidate]
    grid: tuple[tuple[Fraction, Fraction], ...]  # (rho, D(rho)) samples
    margin: Fraction  # D'(0) = W_1[reference] - W_1[candidate]
    verdict: str
    crossover_bracket: tuple[Fraction, Fraction] | None
    small_rho_witness: tuple[Fraction, Fraction] | None  # (rho_0, D(rho_0))


def _small_rho_witness(diff, grid):
    """A rho_0 with D positive on every sampled point of (0, rho_0].

    The positive grid prefix serves when there is one. Otherwise halve
    downward from below the first grid point, so no grid sample lies in
    (0, rho_0]; termination is guaranteed near zero, where
    D(rho) >= margin*rho - (n-1)*rho^2 with margin > 0.
    """
    prefix_last = None
    for rho, val in grid[1:]:
        if val > 0:
            prefix_last = (rho, val)
        else:
            break
    if prefix_last is not None:
        return prefix_last
    rho = grid[1][0] / 2
    while True:
        val = _eval_poly(diff, rho)
        if val > 0:
            return (rho, val)
        rho /= 2


def compare_stability(
    candidate: BooleanFunction, reference: BooleanFunction, grid_size: int = 256
) -> ComparisonReport:
    """Compare noise-stability curves exactly on a rho grid over [0, 1].

    The verdict is ``refutes_at_small_rho`` exactly when the level-1 weight
    of the candidate is strictly below the reference's, ``consistent`` when
    additionally no sampled difference is positive, and ``indeterminate``
    otherwise (a positive sample without the level-1 certificate).
    """
    if candidate.n != reference.n:
        raise ValueError(f"arity mismatch: {candidate.n} vs {reference.n}")
    if grid_size < 2:
        raise ValueError("grid size must be at least 2")
    poly_f = stability_polynomial(wht(candidate))
    poly_g = stability_polynomial(wht(reference))
    diff = tuple(g - f for f, g in zip(poly_f.weights, poly_g.weights))
    grid = tuple(
        (Fraction(t, grid_size), _eval_poly(diff, Fraction(t, grid_size)))
        for t in range(grid_size + 1)
    )
    margin = diff[1]
    brackets = _sign_change_brackets(diff, grid)
    if margin > 0:
        verdict = VERDICT_REFUTES
        witness = _small_rho_witness(diff, grid)
    else:
        witness = None
        verdict = (
            VERDICT_CONSISTENT
            if all(val <= 0 for _, val in grid)
            else VERDICT_INDETERMINATE
        )
    return ComparisonReport(
        arity=candidate.n,
        poly_candidate=poly_f,
        poly_reference=poly_g,
        diff_poly=diff,
        grid=grid,
        margin=margin,
        verdict=verdict,
        crossover_bracket=brackets[0] if brackets else None,
        small_rho_witness=witness,
    )


def crossover_scan(
    candidate: BooleanFunction, reference: BooleanFunction, resolution: int = 4096
) -> list[tuple[Fraction, Fraction]]:
    """Locate every sign change of the stability difference on (0, 1).

    Samples at multiples of 1/resolution (default 2^-12), then bisects each
    strict sign flip to width <= 2^-40. Between returned brackets the
    difference is sign-constant on the sampled points only; the resolution is
    the caller-visible bound on what the scan can distinguish.
    """
    if candidate.n != reference.n:
        raise ValueError(f"arity mismatch: {candidate.n} vs {reference.n}")
    if resolution < 2:
        raise ValueError("resolution must be at least 2")
    poly_f = stability_polynomial(wht(candidate))
    poly_g = stability_polynomial(wht(reference))
    diff = tuple(g - f for f, g in zip(poly_f.weights, poly_g.weights))
    samples = [
        (Fraction(t, resolution), _eval_poly(diff, Fraction(t, resolution)))
        for t in range(resolution + 1)
    ]
    return _sign_change_brackets(diff, samples)


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    claimed: object  # Fraction or bool
    computed: object
    passed: bool


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple[IdentityCheck, ...]
    passed: bool
    first_failure: str | None
    majority_influences: tuple[Fraction, ...]
    candidate_influences: tuple[Fraction, ...]
    w1_majority: Fraction
    w1_candidate: Fraction
    stab_rho: Fraction
    stab_majority: Fraction
    stab_candidate: Fraction


def verify_counterexample(
    candidate: BooleanFunction | None = None,
    majority5: BooleanFunction | None = None,
) -> VerificationReport:
    """Recompute the exact spectral facts that make the bundled function
    sign(2x1 + 2x2 + x3 + x4 + x5) less stable than Maj_5 near rho = 0.

    Every claimed value is hand-countable: coordinate 1 of Maj_5 is pivotal
    iff the other four coordinates split 2-2, giving C(4,2)/2^4 = 3/8;
    coordinate 1 of f is pivotal iff |2x2 + x3 + x4 + x5| = 1 (8 of 16
    settings); coordinate 3 iff 2x1 + 2x2 + x4 + x5 = 0, forcing x1 = -x2
    and x4 = -x5 (4 of 16). Monotonicity turns those influences into the
    level-1 coefficients, so W_1 is 5*(3/8)^2 = 45/64 against
    2*(1/2)^2 + 3*(1/4)^2 = 44/64. A mismatch here signals an implementation
    bug, not a wrong claim; the ``candidate``/``majority5`` overrides exist
    so harnesses can inject a corrupted table and watch the failure path.
    """
    maj = majority5 if majority5 is not None else majority(5)
    cand = candidate if candidate is not None else counterexample()
    e_maj = wht(maj)
    e_cand = wht(cand)
    inf_maj = tuple(influence(maj, i) for i in range(1, 6))
    inf_cand = tuple(influence(cand, i) for i in range(1, 6))
    w1_maj = degree_weight(e_maj, 1)
    w1_cand = degree_weight(e_cand, 1)
    rho = Fraction(1, 10)
    stab_maj = stability_polynomial(e_maj).evaluate(rho)
    stab_cand = stability_polynomial(e_cand).evaluate(rho)

    checks = []

    def check(name, claimed, computed):
        checks.append(IdentityCheck(name, claimed, computed, claimed == computed))

    check("Inf_1[Maj_5]", Fraction(3, 8), inf_maj[0])
    check("Inf_1[f]", Fraction(1, 2), inf_cand[0])
    check("Inf_3[f]", Fraction(1, 4), inf_cand[2])
    check("Maj_5 monotone", True, is_monotone(maj))
    check("f monotone", True, is_monotone(cand))
    check(
        "fhat({i}) = Inf_i[Maj_5] for all i",
        True,
        all(coefficient(e_maj, 1 << (i - 1)) == inf_maj[i - 1] for i in range(1, 6)),
    )
    check(
        "fhat({i}) = Inf_i[f] for all i",
        True,
        all(coefficient(e_cand, 1 << (i - 1)) == inf_cand[i - 1] for i in range(1, 6)),
    )
    check("Inf_i[f] constant on {1,2}", True, inf_cand[0] == inf_cand[1])
    check("Inf_i[f] constant on {3,4,5}", True, inf_cand[2] == inf_cand[3] == inf_cand[4])
    check("W^1[Maj_5]", Fraction(45, 64), w1_maj)
    check("W^1[f]", Fraction(44, 64), w1_cand)
    check("Maj_5 unbiased", True, is_unbiased(maj))
    check("f unbiased", True, is_unbiased(cand))
    check("W^1[f] < W^1[Maj_5]", True, w1_cand < w1_maj)
    check("Stab_{1/10}[f] < Stab_{1/10}[Maj_5]", True, stab_cand < stab_maj)

    failures = [c.name for c in checks if not c.passed]
    return VerificationReport(
        checks=tuple(checks),
        passed=not failures,
        first_failure=failures[0] if failures else None,
        majority_influences=inf_maj,
        candidate_influences=inf_cand,
        w1_majority=w1_maj,
        w1_candidate=w1_cand,
        stab_rho=rho,
        stab_majority=stab_maj,
        stab_candidate=stab_cand,
    )


@dataclass(frozen=True)
class SearchResult:
    """One weight vector whose function beats majority's W_1 from below."""

    spec: LtfSpec
    w1: Fraction
    w1_majority: Fraction
    margin: Fraction  # w1_majority - w1, positive for reported results
    unbiased: bool
    monotone: bool
    odd: bool
    tie_free: bool
    table_hex: str


def canonical_weight_vectors(n: int, max_weight: int):
    """Nonincreasing vectors over [1, max_weight] with gcd 1.

    This canonical slice loses nothing for the W_1 screen: permuting
    coordinates or negating any of them leaves every degree weight unchanged,
    and rescaling all weights by a common factor leaves the function itself
    unchanged.
    """
    for w in combinations_with_replacement(range(max_weight, 0, -1), n):
        if math.gcd(*w) == 1:
            yield w


def _evaluate_candidate(weights, *, w1_majority, require_tie_free):
    spec = LtfSpec(weights)
    witness = tie_witness(spec)
    if witness is not None:
        if require_tie_free:
            return None
        spec = LtfSpec(weights, 0, TIE_TO_MINUS_ONE)
    f = materialize(spec)
    # Tie-broken theta=0 functions lean toward -1 and can never be unbiased,
    # so this filter also guarantees tie_free on everything reported.
    if not is_unbiased(f):
        return None
    w1 = degree_weight(wht(f), 1)
    margin = w1_majority - w1
    if margin <= 0:
        return None
    return SearchResult(
        spec=spec,
        w1=w1,
        w1_majority=w1_majority,
        margin=margin,
        unbiased=True,
        monotone=is_monotone(f),
        odd=is_odd(f),
        tie_free=witness is None,
        table_hex=f.to_hex(),
    )


def search_counterexamples(
    n: int,
    max_weight: int,
    require_tie_free: bool = True,
    workers: int = 1,
) -> list[SearchResult]:
    """Exhaust canonical weight vectors and report every W_1 beat of Maj_n.

    Results are deduplicated on the materialized truth table (distinct weight
    vectors can define the same function) and sorted by margin descending,
    ties broken by the weight tuple, so the output is deterministic for any
    worker count. Workers shard the vector list as pure tasks; the merge
    preserves enumeration order before deduplication.
    """
    if not isinstance(n, int) or n < 1 or n % 2 == 0:
        raise ValueError(f"search needs a positive odd arity, got {n!r}")
    if n > SEARCH_MAX_ARITY:
        raise ValueError(f"exhaustive search capped at arity {SEARCH_MAX_ARITY}")
    if max_weight < 1:
        raise ValueError("max_weight must be at least 1")
    if workers < 1:
        raise ValueError("workers must be at least 1")
    w1_majority = degree_weight(wht(majority(n)), 1)
    vectors = list(canonical_weight_vectors(n, max_weight))
    job = partial(
        _evaluate_candidate,
        w1_majority=w1_majority,
        require_tie_free=require_tie_free,
    )
    if workers == 1:
        raw = [job(v) for v in vectors]
    else:
        chunk = max(1, len(vectors) // (workers * 4))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            raw = list(pool.map(job, vectors, chunksize=chunk))
    seen = set()
    merged = []
    for result in raw:
        if result is None or result.table_hex in seen:
            continue
        seen.add(result.table_hex)
        merged.append(result)
    merged.sort(key=lambda r: (-r.margin, r.spec.weights))
    return merged
