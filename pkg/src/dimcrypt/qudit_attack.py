"""Asymmetric cloning attack on 2**n-level systems in 2**n + 1 mutually unbiased bases.

Only the outcome-level relations are modelled: the cloner is described by
amplitudes ``(alpha_t, beta_t)`` with

    alpha_t**2 + 2**(1-n) * alpha_t * beta_t + beta_t**2 = 1,

Bob's symbol error rate is ``D = (1 - 2**-n) beta_t**2``, Eve's is
``D_E = (1 - 2**-n) alpha_t**2``, and ``mu = D_E / (1 - D)`` is Eve's error
rate on the rounds where Bob is correct.  On Bob-error rounds Eve knows the
symbol, which is what the ``(1 - D)`` prefactor in her information expresses.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, ValidationError
from .infotheory import xlog2x

CONSTRAINT_TOL = 1e-12
MAX_N = 30


@dataclass(frozen=True)
class QuditClonerParams:
    n: int
    alpha_t: float
    beta_t: float

    def __post_init__(self) -> None:
        _check_n(self.n)
        for name in ("alpha_t", "beta_t"):
            v = getattr(self, name)
            if not 0.0 <= v <= 1.0:
                raise ValidationError(f"{name} must lie in [0, 1], got {v!r}")
        if abs(constraint_residual(self)) > CONSTRAINT_TOL:
            raise ValidationError(f"cloner normalization violated by {constraint_residual(self):.3e}")

    @property
    def d(self) -> int:
        return 2**self.n


@dataclass(frozen=True)
class QuditAttackPoint:
    n: int
    D: float
    D_E: float
    mu: float
    info_bob: float
    info_eve: float


def _check_n(n) -> int:
    if int(n) != n or not 1 <= n <= MAX_N:
        raise ValidationError(f"n must be an integer in [1, {MAX_N}], got {n!r}")
    return int(n)


def constraint_residual(params: QuditClonerParams) -> float:
    a, b = params.alpha_t, params.beta_t
    return a * a + 2.0 ** (1 - params.n) * a * b + b * b - 1.0


def qudit_params_from_beta(n: int, beta_t: float) -> QuditClonerParams:
    n = _check_n(n)
    beta_t = float(beta_t)
    if not 0.0 <= beta_t <= 1.0:
        raise ValidationError(f"beta_t must lie in [0, 1], got {beta_t!r}")
    c = 2.0 ** (1 - n)
    alpha_t = (-c * beta_t + math.sqrt(c * c * beta_t * beta_t - 4.0 * (beta_t * beta_t - 1.0))) / 2.0
    return QuditClonerParams(n=n, alpha_t=min(max(alpha_t, 0.0), 1.0), beta_t=beta_t)


def qudit_disturbances(params: QuditClonerParams) -> tuple[float, float, float]:
    """Return ``(D, D_E, mu)``."""
    scale = 1.0 - 2.0 ** (-params.n)
    D = scale * params.beta_t**2
    D_E = scale * params.alpha_t**2
    if D >= 1.0:
        raise DomainError("Bob's disturbance reached 1; mu is undefined")
    return D, D_E, D_E / (1.0 - D)


def qudit_information(params: QuditClonerParams) -> tuple[float, float]:
    """Return ``(info_bob, info_eve)`` in bits per 2**n-valued symbol."""
    n = params.n
    wrong = 2.0**n - 1.0
    D, _, mu = qudit_disturbances(params)
    info_bob = n + xlog2x(1.0 - D) + xlog2x(D) - D * math.log2(wrong)
    info_eve = n + (1.0 - D) * (xlog2x(1.0 - mu) + xlog2x(mu) - mu * math.log2(wrong))
    return info_bob, info_eve


def qudit_attack_point(params: QuditClonerParams) -> QuditAttackPoint:
    D, D_E, mu = qudit_disturbances(params)
    info_bob, info_eve = qudit_information(params)
    return QuditAttackPoint(n=params.n, D=D, D_E=D_E, mu=mu, info_bob=info_bob, info_eve=info_eve)


def _dense_guard(n: int) -> None:
    if n > 20:
        raise ValidationError(f"dense distributions are limited to n <= 20, got {n}")


def bob_distribution(params: QuditClonerParams) -> np.ndarray:
    """Bob's symbol distribution for reference symbol 0: ``(1-D, D/(d-1), ...)``."""
    _dense_guard(params.n)
    D, _, _ = qudit_disturbances(params)
    d = params.d
    p = np.full(d, D / (d - 1))
    p[0] = 1.0 - D
    return p


def eve_case_distributions(params: QuditClonerParams) -> tuple[np.ndarray, np.ndarray]:
    """Eve's case weights and conditional symbol distributions for reference symbol 0.

    Case 0 is "Bob correct" (weight ``1 - D``, Eve wrong w.p. ``mu`` spread
    uniformly); case 1 is "Bob wrong" (weight ``D``, Eve certain).
    """
    _dense_guard(params.n)
    D, _, mu = qudit_disturbances(params)
    d = params.d
    cond = np.zeros((2, d))
    cond[0, :] = mu / (d - 1)
    cond[0, 0] = 1.0 - mu
    cond[1, 0] = 1.0
    return np.array([1.0 - D, D]), cond
