"""Spectral quantities against independent brute-force references."""

from fractions import Fraction

import numpy as np
import pytest

from boolfun import (
    BooleanFunction,
    LtfSpec,
    StabilityPolynomial,
    character_matrix,
    coefficient,
    counterexample,
    degree_weight,
    influence,
    influence_from_spectrum,
    inverse_wht,
    majority,
    materialize,
    naive_expansion,
    stability_oracle,
    stability_polynomial,
    wht,
)

from helpers import random_function

DICTATOR = BooleanFunction(1, 0b10)
PARITY2 = BooleanFunction.from_signs([1, -1, -1, 1])  # x1 * x2


def literal_chi(subset_mask: int, j: int, n: int) -> int:
    """chi_S(j) straight from the definition, one coordinate at a time."""
    value = 1
    for i in range(1, n + 1):
        if (subset_mask >> (i - 1)) & 1:
            value *= 1 if (j >> (i - 1)) & 1 else -1
    return value


def test_character_matrix_matches_literal_definition():
    for n in range(1, 5):
        m = character_matrix(n)
        for s in range(1 << n):
            for j in range(1 << n):
                assert m[s, j] == literal_chi(s, j, n)


def test_wht_dictator():
    e = wht(DICTATOR)
    assert coefficient(e, 0) == 0
    assert coefficient(e, 1) == 1


def test_wht_parity():
    e = wht(PARITY2)
    assert coefficient(e, 0b11) == 1
    assert coefficient(e, 0b00) == 0
    assert coefficient(e, 0b01) == 0
    assert coefficient(e, 0b10) == 0


def test_wht_majority3():
    e = wht(majority(3))
    for i in (1, 2, 3):
        assert coefficient(e, 1 << (i - 1)) == Fraction(1, 2)
    assert coefficient(e, 0b111) == Fraction(-1, 2)
    for mask in (0, 0b011, 0b101, 0b110):
        assert coefficient(e, mask) == 0


def test_wht_majority5_levels():
    e = wht(majority(5))
    for i in range(1, 6):
        assert coefficient(e, 1 << (i - 1)) == Fraction(3, 8)
    assert coefficient(e, 0b00111) == Fraction(-1, 8)
    assert coefficient(e, 0b11111) == Fraction(3, 8)


def test_counterexample_coefficients():
    e = wht(counterexample())
    assert coefficient(e, 0b00100) == Fraction(1, 4)
    assert coefficient(e, 0b00001) == Fraction(1, 2)
    assert coefficient(e, 0) == 0  # unbiased


def test_coefficient_mask_range():
    e = wht(DICTATOR)
    with pytest.raises(IndexError):
        coefficient(e, 2)


def test_wht_equals_naive_exhaustive_n2():
    for table in range(16):
        f = BooleanFunction(2, table)
        assert np.array_equal(wht(f).scaled, naive_expansion(f).scaled)


def test_wht_equals_naive_random():
    rng = np.random.default_rng(21)
    for n in range(1, 11):
        for _ in range(3):
            f = random_function(n, rng)
            assert np.array_equal(wht(f).scaled, naive_expansion(f).scaled)


def test_naive_expansion_arity_cap():
    rng = np.random.default_rng(22)
    with pytest.raises(ValueError):
        naive_expansion(random_function(11, rng))


def test_inverse_transform_roundtrip():
    rng = np.random.default_rng(23)
    for n in (1, 2, 5, 10):
        f = random_function(n, rng)
        assert inverse_wht(wht(f)) == f


def test_coefficient_parity_invariant():
    # each scaled coefficient is a sum of 2^n terms of +-1, hence even
    rng = np.random.default_rng(24)
    for n in (1, 3, 6):
        e = wht(random_function(n, rng))
        assert not np.any(e.scaled & 1)


def test_parseval_random():
    rng = np.random.default_rng(25)
    for n in (1, 4, 8, 12):
        f = random_function(n, rng)
        e = wht(f)
        assert int(np.sum(e.scaled.astype(np.int64) ** 2)) == 4**f.n


def test_influence_paper_values():
    maj5 = majority(5)
    cand = counterexample()
    assert influence(maj5, 1) == Fraction(3, 8)
    assert influence(cand, 1) == Fraction(1, 2)
    assert influence(cand, 3) == Fraction(1, 4)
    assert [influence(cand, i) for i in range(1, 6)] == [
        Fraction(1, 2),
        Fraction(1, 2),
        Fraction(1, 4),
        Fraction(1, 4),
        Fraction(1, 4),
    ]


def test_influence_dictator():
    f = materialize(LtfSpec((1, 0)))  # depends on x1 only
    assert influence(f, 1) == 1
    assert influence(f, 2) == 0


def test_influence_range_check():
    with pytest.raises(ValueError):
        influence(DICTATOR, 2)
    with pytest.raises(ValueError):
        influence_from_spectrum(wht(DICTATOR), 0)


def test_influence_from_spectrum_values():
    parity5 = BooleanFunction.from_signs(character_matrix(5)[0b11111])
    e = wht(parity5)
    for i in range(1, 6):
        assert influence_from_spectrum(e, i) == 1
    assert influence_from_spectrum(wht(majority(5)), 1) == Fraction(3, 8)
    assert influence_from_spectrum(wht(counterexample()), 3) == Fraction(1, 4)


def test_influence_two_paths_agree():
    rng = np.random.default_rng(26)
    for n in (1, 2, 5, 10):
        f = random_function(n, rng)
        e = wht(f)
        for i in range(1, n + 1):
            assert influence(f, i) == influence_from_spectrum(e, i)


def test_degree_weights():
    assert degree_weight(wht(majority(5)), 1) == Fraction(45, 64)
    assert degree_weight(wht(counterexample()), 1) == Fraction(44, 64)
    parity3 = BooleanFunction.from_signs(character_matrix(3)[0b111])
    assert degree_weight(wht(parity3), 3) == 1
    with pytest.raises(ValueError):
        degree_weight(wht(DICTATOR), 2)


def test_stability_polynomial_known_functions():
    assert stability_polynomial(wht(DICTATOR)).weights == (Fraction(0), Fraction(1))
    assert stability_polynomial(wht(majority(3))).weights == (
        Fraction(0),
        Fraction(3, 4),
        Fraction(0),
        Fraction(1, 4),
    )
    assert stability_polynomial(wht(majority(5))).weights == (
        Fraction(0),
        Fraction(45, 64),
        Fraction(0),
        Fraction(5, 32),
        Fraction(0),
        Fraction(9, 64),
    )
    assert stability_polynomial(wht(counterexample())).weights == (
        Fraction(0),
        Fraction(11, 16),
        Fraction(0),
        Fraction(1, 4),
        Fraction(0),
        Fraction(1, 16),
    )


def test_stability_weights_sum_to_one():
    rng = np.random.default_rng(27)
    for n in (1, 3, 7):
        poly = stability_polynomial(wht(random_function(n, rng)))
        assert sum(poly.weights) == 1
        assert all(w >= 0 for w in poly.weights)


def test_stability_evaluation():
    rng = np.random.default_rng(28)
    f = random_function(6, rng)
    poly = stability_polynomial(wht(f))
    assert poly.evaluate(1) == 1  # Parseval
    maj3 = stability_polynomial(wht(majority(3)))
    assert maj3.evaluate(0) == 0  # unbiased
    assert maj3.evaluate(Fraction(1, 2)) == Fraction(13, 32)
    parity3 = stability_polynomial(wht(BooleanFunction.from_signs(character_matrix(3)[0b111])))
    assert parity3.evaluate(Fraction(2, 3)) == Fraction(8, 27)


def test_stability_monotone_on_grid():
    rng = np.random.default_rng(29)
    for n in (2, 5):
        poly = stability_polynomial(wht(random_function(n, rng)))
        values = [poly.evaluate(Fraction(t, 16)) for t in range(17)]
        assert all(a <= b for a, b in zip(values, values[1:]))


def literal_pair_expectation(f, g, rho: Fraction) -> Fraction:
    """The correlated-pair double sum with the per-coordinate tau product."""
    n = f.n
    agree = (1 + rho) / 2
    disagree = (1 - rho) / 2
    total = Fraction(0)
    for x in range(f.size):
        for y in range(f.size):
            weight = Fraction(1)
            for i in range(1, n + 1):
                same = ((x >> (i - 1)) & 1) == ((y >> (i - 1)) & 1)
                weight *= agree if same else disagree
            total += f.evaluate(x) * g.evaluate(y) * weight
    return total / f.size


def test_stability_oracle_matches_literal_definition():
    rng = np.random.default_rng(30)
    for n in (1, 2, 3):
        f = random_function(n, rng)
        g = random_function(n, rng)
        for rho in (Fraction(0), Fraction(1, 3), Fraction(1)):
            assert stability_oracle(f, g, rho) == literal_pair_expectation(f, g, rho)


def test_stability_oracle_known_values():
    assert stability_oracle(DICTATOR, DICTATOR, Fraction(1, 2)) == Fraction(1, 2)
    maj3 = majority(3)
    assert stability_oracle(maj3, maj3, Fraction(1, 2)) == Fraction(13, 32)
    cand = counterexample()
    assert stability_oracle(cand, cand, 0) == 0


def test_stability_oracle_equals_polynomial():
    rng = np.random.default_rng(31)
    for n in (1, 4, 8):
        f = random_function(n, rng)
        poly = stability_polynomial(wht(f))
        for rho in (Fraction(0), Fraction(1, 7), Fraction(9, 10), Fraction(1)):
            assert stability_oracle(f, f, rho) == poly.evaluate(rho)


def test_stability_oracle_errors():
    rng = np.random.default_rng(32)
    with pytest.raises(ValueError):
        stability_oracle(random_function(2, rng), random_function(3, rng), Fraction(1, 2))
    with pytest.raises(ValueError):
        f11 = random_function(11, rng)
        stability_oracle(f11, f11, Fraction(1, 2))


def test_stability_polynomial_evaluate_accepts_ints():
    poly = StabilityPolynomial((Fraction(0), Fraction(1)))
    assert poly.evaluate(1) == 1
