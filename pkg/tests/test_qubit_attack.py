import itertools
import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from dimcrypt.errors import ValidationError
from dimcrypt.infotheory import binary_entropy, shannon_entropy
from dimcrypt.qubit_attack import (
    ClonerParams,
    outcome_probabilities,
    params_from_beta,
    params_from_pb,
    quart_case_table,
    string_information,
    symbol_case_table,
)

SYM = 1 / math.sqrt(3)


def quadratic_alpha(beta):
    # oracle: largest real root of a^2 + beta*a + beta^2 - 1
    return max(r.real for r in np.roots([1.0, beta, beta * beta - 1.0]))


def brute_force_informations(n, params):
    """Enumerate every per-qubit outcome pattern; reference symbol is 0."""
    pr = outcome_probabilities(params)
    # per qubit: (bob_bit, eve_bit, m, prob) with Alice's bit 0
    per_qubit = [(0, 0, 0, pr.p0), (0, 1, 0, pr.pe), (1, 0, 1, pr.pb)]
    bob = {}
    eve = {}
    for combo in itertools.product(per_qubit, repeat=n):
        p = math.prod(c[3] for c in combo)
        b = tuple(c[0] for c in combo)
        e = tuple(c[1] for c in combo)
        m = tuple(c[2] for c in combo)
        bob[b] = bob.get(b, 0.0) + p
        eve.setdefault(m, {})
        eve[m][e] = eve[m].get(e, 0.0) + p
    info_bob = n - shannon_entropy(list(bob.values()))
    h_eve = 0.0
    for dist in eve.values():
        w = sum(dist.values())
        if w == 0:
            continue
        h_eve += w * shannon_entropy([v / w for v in dist.values()])
    return info_bob, n - h_eve


def test_params_from_beta_endpoints():
    assert params_from_beta(0.0) == ClonerParams(1.0, 0.0)
    assert params_from_beta(1.0).alpha == pytest.approx(0.0, abs=1e-15)
    assert params_from_beta(SYM).alpha == pytest.approx(SYM, abs=1e-15)


def test_params_from_pb_border_value():
    p = params_from_pb(0.1564)
    assert p.beta == pytest.approx(math.sqrt(0.3128), abs=1e-15)
    assert p.alpha == pytest.approx(quadratic_alpha(math.sqrt(0.3128)), abs=1e-12)
    assert p.beta == pytest.approx(0.5593, abs=5e-5)
    assert p.alpha == pytest.approx(0.5952, abs=5e-5)
    assert outcome_probabilities(p).pb == pytest.approx(0.1564, abs=1e-12)


def test_params_from_pb_endpoints():
    assert params_from_pb(0.0) == ClonerParams(1.0, 0.0)
    p = params_from_pb(0.5)
    assert (p.alpha, p.beta) == pytest.approx((0.0, 1.0), abs=1e-15)


@pytest.mark.parametrize("beta", [-0.01, 1.01])
def test_beta_range(beta):
    with pytest.raises(ValidationError):
        params_from_beta(beta)


@pytest.mark.parametrize("pb", [-0.01, 0.51])
def test_pb_range(pb):
    with pytest.raises(ValidationError):
        params_from_pb(pb)


def test_params_constraint_enforced():
    with pytest.raises(ValidationError):
        ClonerParams(0.5, 0.5)


@pytest.mark.parametrize(
    "params, expected",
    [
        (ClonerParams(1.0, 0.0), (0.5, 0.5, 0.0, 0.5)),
        (params_from_beta(1.0), (0.5, 0.0, 0.5, 1.0)),
        (params_from_beta(SYM), (2 / 3, 1 / 6, 1 / 6, 4 / 5)),
    ],
)
def test_outcome_probabilities(params, expected):
    pr = outcome_probabilities(params)
    assert (pr.p0, pr.pe, pr.pb, pr.q) == pytest.approx(expected, abs=1e-12)


def test_outcome_probabilities_sum_on_random_betas():
    for beta in np.random.default_rng(0).random(1000):
        pr = outcome_probabilities(params_from_beta(beta))
        assert abs(pr.p0 + pr.pe + pr.pb - 1.0) < 1e-12
        assert 0.0 <= pr.pb <= 0.5
        assert abs(pr.q - pr.p0 / (pr.p0 + pr.pe)) < 1e-12


def test_quart_table_no_attack():
    t = quart_case_table(ClonerParams(1.0, 0.0))
    np.testing.assert_allclose(t.xi, [1, 0, 0, 0])
    np.testing.assert_allclose(t.pe_cond[0], [0.25] * 4)
    np.testing.assert_allclose(t.pb_avg, [1, 0, 0, 0])


def test_quart_table_matches_written_cases():
    p = params_from_beta(0.4)
    pr = outcome_probabilities(p)
    q, pb = pr.q, pr.pb
    t = quart_case_table(p)
    np.testing.assert_allclose(t.xi, [(pr.p0 + pr.pe) ** 2, pb * (pr.p0 + pr.pe), pb * (pr.p0 + pr.pe), pb**2], atol=1e-15)
    np.testing.assert_allclose(t.pe_cond[0], [q * q, q * (1 - q), q * (1 - q), (1 - q) ** 2], atol=1e-15)
    np.testing.assert_allclose(t.pe_cond[1], [q, 0, 1 - q, 0], atol=1e-15)
    np.testing.assert_allclose(t.pe_cond[2], [q, 1 - q, 0, 0], atol=1e-15)
    np.testing.assert_allclose(t.pe_cond[3], [1, 0, 0, 0], atol=1e-15)
    np.testing.assert_array_equal(t.pb_cond, np.eye(4))


@given(st.floats(0, 1))
def test_quart_table_closed_forms(beta):
    p = params_from_beta(beta)
    pr = outcome_probabilities(p)
    t = quart_case_table(p)
    assert abs(t.xi.sum() - 1) < 1e-12
    for row in (*t.pe_cond, *t.pb_cond):
        assert abs(row.sum() - 1) < 1e-12
    pb = pr.pb
    np.testing.assert_allclose(t.pb_avg, [(1 - pb) ** 2, pb * (1 - pb), pb * (1 - pb), pb**2], atol=1e-12)
    eve_avg = sum(x * shannon_entropy(row) for x, row in zip(t.xi, t.pe_cond))
    assert abs((2 - eve_avg) - (2 - 2 * binary_entropy(pr.q) * (1 - pb))) < 1e-12


@pytest.mark.parametrize("n", [1, 3])
def test_symbol_case_table_general_n(n):
    p = params_from_beta(0.7)
    t = symbol_case_table(p, n)
    point = string_information(n, p)
    eve_avg = sum(x * shannon_entropy(row) for x, row in zip(t.xi, t.pe_cond))
    assert n - eve_avg == pytest.approx(point.info_eve, abs=1e-12)
    assert n - shannon_entropy(t.pb_avg) == pytest.approx(point.info_bob, abs=1e-12)


def test_string_information_examples():
    pt = string_information(2, ClonerParams(1.0, 0.0))
    assert (pt.info_bob, pt.info_eve, pt.disturbance) == (2.0, 0.0, 0.0)
    pt = string_information(2, params_from_pb(0.1564))
    assert pt.disturbance == pytest.approx(0.2883, abs=5e-5)
    assert abs(pt.info_bob - pt.info_eve) < 1e-3


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("beta", [0.0, 0.3, 0.5592, 0.9, 1.0])
def test_string_information_against_enumeration(n, beta):
    p = params_from_beta(beta)
    ib, ie = brute_force_informations(n, p)
    pt = string_information(n, p)
    assert pt.info_bob == pytest.approx(ib, abs=1e-12)
    assert pt.info_eve == pytest.approx(ie, abs=1e-12)
    assert pt.disturbance == pytest.approx(1 - (1 - outcome_probabilities(p).pb) ** n, abs=1e-12)


def test_single_qubit_reduction():
    p = params_from_beta(0.45)
    pr = outcome_probabilities(p)
    pt = string_information(1, p)
    assert pt.info_bob == pytest.approx(1 - binary_entropy(pr.pb), abs=1e-15)
    assert pt.info_eve == pytest.approx(1 - binary_entropy(pr.q) * (1 - pr.pb), abs=1e-15)


def test_monotone_in_pb():
    betas = np.linspace(0, 1, 1000)
    pts = [string_information(2, params_from_beta(b)) for b in betas]
    bob = np.array([p.info_bob for p in pts])
    eve = np.array([p.info_eve for p in pts])
    assert np.all(np.diff(bob) < 0)
    assert np.all(np.diff(eve) > 0)
    assert all(0 <= p.info_bob <= 2 and 0 <= p.info_eve <= 2 for p in pts)


def test_string_information_rejects_bad_n():
    with pytest.raises(ValidationError):
        string_information(0, ClonerParams(1.0, 0.0))
