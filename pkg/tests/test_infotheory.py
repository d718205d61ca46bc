import itertools

import mpmath
import numpy as np
import pytest
from hypothesis import given, strategies as st

from dimcrypt.errors import ValidationError
from dimcrypt.infotheory import as_prob_vector, binary_entropy, entropy_of_counts, shannon_entropy


def mp_entropy(ps):
    mpmath.mp.dps = 50
    ps = [mpmath.mpf(p) for p in ps]
    return float(-sum(p * mpmath.log(p, 2) for p in ps if p > 0))


def test_uniform_and_point_mass():
    assert shannon_entropy([0.25] * 4) == 2.0
    assert shannon_entropy([1, 0, 0, 0]) == 0.0


def test_against_high_precision_oracle():
    expected = mp_entropy(["0.1564", "0.8436"])
    assert expected == pytest.approx(0.62563, abs=5e-6)
    assert expected == pytest.approx(0.6257, abs=1e-4)
    assert shannon_entropy([0.1564, 0.8436]) == pytest.approx(expected, abs=1e-14)
    assert binary_entropy(0.1564) == pytest.approx(expected, abs=1e-14)


def test_binary_entropy_endpoints():
    assert binary_entropy(0.5) == 1.0
    assert binary_entropy(0.0) == 0.0
    assert binary_entropy(1.0) == 0.0


@pytest.mark.parametrize(
    "bad", [[0.5, 0.6], [-0.1, 1.1], [0.5, 0.5 + 1e-6], [], [[0.5, 0.5]], [np.nan, 1.0]]
)
def test_invalid_vectors_rejected(bad):
    with pytest.raises(ValidationError):
        shannon_entropy(bad)


def test_normalization_tolerance_is_loose_enough_for_roundoff():
    as_prob_vector([0.1] * 10)


@pytest.mark.parametrize("q", [-1e-9, 1.5])
def test_binary_entropy_range(q):
    with pytest.raises(ValidationError):
        binary_entropy(q)


def test_binary_symmetry_on_random_points():
    rng = np.random.default_rng(1)
    for q in rng.random(1000):
        assert abs(binary_entropy(q) - binary_entropy(1 - q)) < 1e-14


prob_vectors = st.lists(st.floats(0, 1), min_size=1, max_size=12).filter(lambda v: sum(v) > 1e-3).map(
    lambda v: [x / sum(v) for x in v]
)


@given(prob_vectors)
def test_entropy_bounds(p):
    h = shannon_entropy(p)
    assert -1e-12 <= h <= np.log2(len(p)) + 1e-12


@given(prob_vectors, st.randoms())
def test_entropy_permutation_invariant(p, rnd):
    perm = list(p)
    rnd.shuffle(perm)
    assert shannon_entropy(perm) == pytest.approx(shannon_entropy(p), abs=1e-12)


@given(st.floats(0, 1))
def test_binary_matches_general(q):
    assert binary_entropy(q) == pytest.approx(shannon_entropy([q, 1 - q]), abs=1e-14)


def test_tiny_entries_count_as_zero():
    assert shannon_entropy([1.0, 1e-320]) == 0.0


def test_entropy_of_counts():
    assert entropy_of_counts([5, 5, 5, 5]) == 2.0
    with pytest.raises(ValidationError):
        entropy_of_counts([0, 0])

