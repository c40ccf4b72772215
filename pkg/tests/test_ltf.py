"""Threshold-function materialization, majority, and structural predicates."""

from fractions import Fraction

import numpy as np
import pytest

from boolfun import (
    BooleanFunction,
    LtfSpec,
    TieEncountered,
    influence,
    is_monotone,
    is_odd,
    is_unbiased,
    majority,
    materialize,
    parse_spec,
    render_spec,
    signs_to_index,
    tie_witness,
)

from helpers import random_monotone_spec


def test_materialize_dictator():
    f = materialize(LtfSpec((1,)))
    assert (f.evaluate(0), f.evaluate(1)) == (-1, 1)


def test_materialize_majority3():
    assert materialize(LtfSpec((1, 1, 1))) == majority(3)
    assert majority(3).to_hex() == "e8"


def test_materialize_counterexample_points():
    f = materialize(LtfSpec((2, 2, 1, 1, 1)))
    assert f.evaluate(signs_to_index((1, 1, -1, -1, -1))) == 1
    assert f.evaluate(signs_to_index((-1, -1, 1, 1, 1))) == -1
    # all weighted sums are odd, so no input ever ties
    assert tie_witness(LtfSpec((2, 2, 1, 1, 1))) is None


def test_tie_rejected_with_witness():
    spec = LtfSpec((1, 1, 1, 1, 2))
    with pytest.raises(TieEncountered) as err:
        materialize(spec)
    assert err.value.index == 7
    assert err.value.signs == (1, 1, 1, -1, -1)
    assert "(+1, +1, +1, -1, -1)" in str(err.value)


def test_tie_mapped_to_minus_one():
    spec = LtfSpec((1, 1, 1, 1, 2), 0, "map_to_minus_one")
    f = materialize(spec)
    assert f.evaluate(7) == -1  # the tied input
    assert f.evaluate(signs_to_index((1, 1, 1, 1, 1))) == 1


def test_majority_basics():
    assert majority(1) == materialize(LtfSpec((1,)))
    assert influence(majority(5), 1) == Fraction(3, 8)
    for bad in (0, 2, 4, -3, 25):
        with pytest.raises(ValueError):
            majority(bad)


def test_is_unbiased():
    assert is_unbiased(materialize(LtfSpec((2, 2, 1, 1, 1))))
    assert is_unbiased(majority(5))
    assert not is_unbiased(BooleanFunction(3, 0xFF))


def test_is_odd():
    assert is_odd(majority(5))
    assert is_odd(materialize(LtfSpec((2, 2, 1, 1, 1))))
    parity2 = BooleanFunction.from_signs([1, -1, -1, 1])  # x1*x2, an even function
    assert not is_odd(parity2)


def test_is_monotone():
    assert is_monotone(materialize(LtfSpec((2, 2, 1, 1, 1))))
    assert is_monotone(majority(5))
    assert not is_monotone(materialize(LtfSpec((-1,))))
    # non-LTF monotone function: (x1 and x2) or (x3 and x4)
    signs = [
        1 if ((j & 3) == 3 or (j & 12) == 12) else -1 for j in range(16)
    ]
    assert is_monotone(BooleanFunction.from_signs(signs))


def test_positive_odd_sum_specs_are_monotone_odd_tie_free():
    rng = np.random.default_rng(11)
    for _ in range(25):
        n = int(rng.integers(1, 10))
        spec = random_monotone_spec(n, rng)
        assert tie_witness(spec) is None
        f = materialize(spec)
        assert is_monotone(f) and is_odd(f)


def test_spec_weight_permutation_commutes():
    rng = np.random.default_rng(12)
    weights = (3, 1, 4, 1, 6)  # odd total, hence tie-free
    assert sum(weights) % 2 == 1
    f = materialize(LtfSpec(weights))
    perm = tuple(int(p) for p in rng.permutation(5) + 1)
    # g(x) = f(x_perm(1), ...) has weight vector w'_k = w_{perm^-1(k)}
    inverse = [0] * 5
    for i, p in enumerate(perm, start=1):
        inverse[p - 1] = i
    permuted_weights = tuple(weights[inverse[k - 1] - 1] for k in range(1, 6))
    assert f.permute_coordinates(perm) == materialize(LtfSpec(permuted_weights))


def test_parse_and_render():
    assert parse_spec("2,2,1,1,1") == LtfSpec((2, 2, 1, 1, 1))
    assert parse_spec("2,2,1,1,1@0") == LtfSpec((2, 2, 1, 1, 1))
    assert parse_spec(" 3 , -1 @ -2".replace(" ", "")) == LtfSpec((3, -1), -2)
    assert parse_spec("1, 2, 3") == LtfSpec((1, 2, 3))
    assert render_spec(LtfSpec((2, 2, 1, 1, 1))) == "2,2,1,1,1@0"
    assert parse_spec(render_spec(LtfSpec((5, -3), 2))) == LtfSpec((5, -3), 2)


def test_parse_errors():
    for bad in ("", "a,b", "1,,2", "1@x", "1@2@3", "1.5,2"):
        with pytest.raises(ValueError):
            parse_spec(bad)


def test_spec_validation():
    with pytest.raises(ValueError):
        LtfSpec(())
    with pytest.raises(ValueError):
        LtfSpec((1,) * 25)
    with pytest.raises(ValueError):
        LtfSpec((1, 2), 0, "coin_flip")
