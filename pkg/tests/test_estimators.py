import numpy as np
import pytest

from dimcrypt.errors import ValidationError
from dimcrypt.quantum_sim import empirical_information, plugin_bias_bound
from dimcrypt.quantum_sim.estimators import offset_histograms


def test_perfect_correlation():
    assert empirical_information(np.eye(4) * 25) == 2.0
    assert plugin_bias_bound(np.eye(4) * 25) == 0.0


def test_exact_uniform_table_has_zero_information():
    assert empirical_information(np.full((4, 4), 7)) == pytest.approx(0.0, abs=1e-15)


def test_sampled_independent_table_within_bias_bound():
    rng = np.random.default_rng(2)
    a = rng.integers(0, 4, 20_000)
    r = rng.integers(0, 4, 20_000)
    table = np.zeros((4, 4))
    np.add.at(table, (a, r), 1)
    info = empirical_information(table)
    bound = plugin_bias_bound(table)
    assert 0 <= info < 5 * bound


def test_offset_folding():
    table = np.zeros((4, 4))
    table[1, 3] = 2  # offset 1 ^ 3 = 2
    table[2, 2] = 5
    np.testing.assert_array_equal(offset_histograms(table), [[5, 0, 2, 0]])


def test_flags_average_separately():
    # flag 0: uniform noise, flag 1: perfect copy, equal weight -> 1 bit of 2
    t = np.zeros((2, 4, 4))
    t[0] = 1
    t[1] = np.eye(4) * 4
    assert empirical_information(t) == pytest.approx(1.0, abs=1e-15)
    # Bob-style pooling of the same rows loses more
    assert empirical_information(t.sum(axis=0)) < 1.0


def test_quart_eve_table_matches_closed_form():
    from dimcrypt.infotheory import binary_entropy
    from dimcrypt.qubit_attack import outcome_probabilities, params_from_beta, quart_case_table

    p = params_from_beta(0.55)
    t = quart_case_table(p)
    pr = outcome_probabilities(p)
    joint = np.zeros((4, 4, 4))
    for m in range(4):
        for a in range(4):
            for v in range(4):
                joint[m, a, a ^ v] = t.xi[m] * t.pe_cond[m, v] * 1e6
    assert empirical_information(joint) == pytest.approx(2 - 2 * binary_entropy(pr.q) * (1 - pr.pb), abs=1e-12)


@pytest.mark.parametrize("bad", [np.zeros((4, 4)), np.ones((3, 3)), np.ones((2, 3)), -np.ones((2, 2))])
def test_invalid_tables(bad):
    with pytest.raises(ValidationError):
        empirical_information(bad)
