"""Asymmetric cloning attack on the six-state qubit protocol.

Eve entangles each qubit with two ancillas E and M.  After basis disclosure she
measures both in Alice's basis, keeps E as her guess and learns the flag
``m = E xor M``.  ``m = 1`` happens exactly when Bob's bit was flipped, and then
Eve's guess is certainly right.

A 2**n-valued symbol is sent as n independent qubits (big-endian, first bit
most significant), each attacked separately.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ValidationError
from .infotheory import binary_entropy

CONSTRAINT_TOL = 1e-12


@dataclass(frozen=True)
class ClonerParams:
    """Cloning-machine amplitudes with ``alpha**2 + alpha*beta + beta**2 == 1``."""

    alpha: float
    beta: float

    def __post_init__(self) -> None:
        for name in ("alpha", "beta"):
            v = getattr(self, name)
            if not 0.0 <= v <= 1.0:
                raise ValidationError(f"{name} must lie in [0, 1], got {v!r}")
        resid = self.alpha**2 + self.alpha * self.beta + self.beta**2 - 1.0
        if abs(resid) > CONSTRAINT_TOL:
            raise ValidationError(f"alpha^2 + alpha*beta + beta^2 - 1 = {resid:.3e}")


@dataclass(frozen=True)
class OutcomeProbabilities:
    """Per-qubit channel seen by Bob and Eve.

    Attributes
    ----------
    p0 : float
        Bob and Eve both correct.
    pe : float
        Bob correct, Eve wrong.
    pb : float
        Bob wrong, Eve correct (this is Bob's qubit error rate).
    q : float
        Eve's probability of being correct given ``m = 0``.
    """

    p0: float
    pe: float
    pb: float
    q: float


@dataclass(frozen=True)
class QuartCaseTable:
    """Case analysis over Eve's flags for reference symbol 0 (all bits zero).

    Rows are indexed by the flag pattern read as a big-endian integer; for
    ``n = 2`` that is ``(m1, m2) = 00, 01, 10, 11``.
    """

    n: int
    xi: np.ndarray  # (2**n,) case weights
    pe_cond: np.ndarray  # (2**n, 2**n) Eve's symbol distribution per case
    pb_cond: np.ndarray  # (2**n, 2**n) Bob's symbol distribution per case
    pb_avg: np.ndarray  # (2**n,) Bob's flag-averaged distribution


@dataclass(frozen=True)
class StringInfoPoint:
    n: int
    disturbance: float
    info_bob: float
    info_eve: float


def _check_unit(name: str, value: float, hi: float = 1.0) -> float:
    value = float(value)
    if not 0.0 <= value <= hi:
        raise ValidationError(f"{name} must lie in [0, {hi}], got {value!r}")
    return value


def params_from_beta(beta: float) -> ClonerParams:
    """Non-negative root ``alpha`` of the cloner normalization for given ``beta``."""
    beta = _check_unit("beta", beta)
    alpha = (-beta + math.sqrt(4.0 - 3.0 * beta * beta)) / 2.0
    return ClonerParams(alpha=min(max(alpha, 0.0), 1.0), beta=beta)


def params_from_pb(pb: float) -> ClonerParams:
    """Cloner whose Bob error rate ``beta**2 / 2`` equals ``pb``."""
    pb = _check_unit("pb", pb, 0.5)
    return params_from_beta(min(math.sqrt(2.0 * pb), 1.0))


def outcome_probabilities(params: ClonerParams) -> OutcomeProbabilities:
    a, b = params.alpha, params.beta
    p0 = (a + b) ** 2 / 2.0
    pe = a * a / 2.0
    pb = b * b / 2.0
    return OutcomeProbabilities(p0=p0, pe=pe, pb=pb, q=p0 / (p0 + pe))


def _bits(value: int, n: int) -> list[int]:
    return [(value >> (n - 1 - j)) & 1 for j in range(n)]


def symbol_case_table(params: ClonerParams, n: int) -> QuartCaseTable:
    """Flag-case table for 2**n-valued symbols built from n attacked qubits.

    With flag ``m_j = 1`` bit j is flipped for Bob and known to Eve; with
    ``m_j = 0`` Bob's bit is right and Eve's is right with probability q.
    """
    if n < 1 or n > 12:
        raise ValidationError(f"n must lie in [1, 12] for a dense table, got {n}")
    probs = outcome_probabilities(params)
    q, pb = probs.q, probs.pb
    d = 2**n
    xi = np.empty(d)
    pe_cond = np.zeros((d, d))
    pb_cond = np.zeros((d, d))
    for m in range(d):
        flags = _bits(m, n)
        xi[m] = math.prod(pb if f else 1.0 - pb for f in flags)
        for v in range(d):
            bits = _bits(v, n)
            # Eve's bit j: certain 0 when flagged, else 0 w.p. q and 1 w.p. 1-q
            pe_cond[m, v] = math.prod(
                (1.0 - x) if f else (q if x == 0 else 1.0 - q) for f, x in zip(flags, bits)
            )
        pb_cond[m, m] = 1.0
    return QuartCaseTable(n=n, xi=xi, pe_cond=pe_cond, pb_cond=pb_cond, pb_avg=xi @ pb_cond)


def quart_case_table(params: ClonerParams) -> QuartCaseTable:
    """The four-case table for quarts (two qubits per symbol)."""
    return symbol_case_table(params, 2)


def string_information(n: int, params: ClonerParams) -> StringInfoPoint:
    """Bob's and Eve's information per 2**n-valued symbol sent as n qubits.

    ``I_B = n (1 - h(pb))`` and ``I_E = n (1 - h(q)(1 - pb))``; the symbol
    error rate is ``1 - (1 - pb)**n``.
    """
    if int(n) != n or n < 1:
        raise ValidationError(f"n must be a positive integer, got {n!r}")
    n = int(n)
    probs = outcome_probabilities(params)
    info_bob = n * (1.0 - binary_entropy(probs.pb))
    info_eve = n * (1.0 - binary_entropy(probs.q) * (1.0 - probs.pb))
    return StringInfoPoint(
        n=n,
        disturbance=1.0 - (1.0 - probs.pb) ** n,
        info_bob=info_bob,
        info_eve=info_eve,
    )
