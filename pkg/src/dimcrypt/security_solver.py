"""Border disturbances where Bob's and Eve's informations cross.

Below the border Bob knows more than Eve and privacy amplification applies.
Both protocols are solved by bisection on a one-parameter cloner family.
"""

from __future__ import annotations

import enum
import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Union

from .errors import SolverError, ValidationError
from .infotheory import binary_entropy
from .qubit_attack import ClonerParams, outcome_probabilities, params_from_pb, string_information
from .qudit_attack import (
    QuditClonerParams,
    qudit_disturbances,
    qudit_information,
    qudit_params_from_beta,
)

MAX_N = 30
RESIDUAL_TOL = 1e-9
BRACKET_EPS = 1e-9


class Protocol(str, enum.Enum):
    QUBIT_STRING = "qubit-string"
    QUDIT_MUB = "qudit-mub"


@dataclass(frozen=True)
class BorderResult:
    protocol: Protocol
    n: int
    d: int
    border_disturbance: float
    per_qubit_pb: float | None
    crossing_params: Union[ClonerParams, QuditClonerParams]
    residual: float


@dataclass(frozen=True)
class RateComparison:
    n: int
    qubit_sift_fraction: Fraction
    qudit_sift_fraction: Fraction
    qubits_per_sifted_dit: int


def bisect(f: Callable[[float], float], lo: float, hi: float, tol: float = 0.0) -> float:
    """Root of ``f`` on ``[lo, hi]`` by bisection.

    Stops once the bracket is narrower than ``tol`` or cannot be split further
    in floating point.  Raises :class:`SolverError` if ``f(lo)`` and ``f(hi)``
    do not differ in sign.
    """
    flo, fhi = f(lo), f(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if (flo > 0) == (fhi > 0):
        raise SolverError(f"no sign change on [{lo!r}, {hi!r}]: f = {flo!r}, {fhi!r}")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        fmid = f(mid)
        if fmid == 0.0:
            return mid
        if (fmid > 0) == (flo > 0):
            lo, flo = mid, fmid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _check_n(n) -> int:
    if int(n) != n or not 1 <= n <= MAX_N:
        raise ValidationError(f"n must be an integer in [1, {MAX_N}], got {n!r}")
    return int(n)


def _qubit_gap(pb: float) -> float:
    # per-bit I_E - I_B; negative at pb = 0, positive at pb = 1/2
    probs = outcome_probabilities(params_from_pb(pb))
    return binary_entropy(pb) - binary_entropy(probs.q) * (1.0 - pb)


def qubit_border(tol: float = 1e-9) -> float:
    """Per-qubit error rate at which Bob's and Eve's informations are equal."""
    if tol < 0:
        raise ValidationError("tol must be non-negative")
    return bisect(_qubit_gap, 0.0, 0.5, tol)


@functools.lru_cache(maxsize=1)
def _qubit_border_exact() -> float:
    return qubit_border(tol=0.0)


def qubit_string_border(n: int) -> BorderResult:
    """Symbol error rate at the crossing for n independently attacked qubits.

    The crossing pb does not depend on n because both informations scale by n.
    """
    n = _check_n(n)
    pb = _qubit_border_exact()
    params = params_from_pb(pb)
    point = string_information(n, params)
    result = BorderResult(
        protocol=Protocol.QUBIT_STRING,
        n=n,
        d=2**n,
        border_disturbance=1.0 - (1.0 - pb) ** n,
        per_qubit_pb=pb,
        crossing_params=params,
        residual=abs(point.info_bob - point.info_eve),
    )
    _check_residual(result)
    return result


def qudit_border(n: int, tol: float = 0.0) -> BorderResult:
    """Bob's disturbance at the crossing for 2**n-level systems.

    Bisects on ``beta_t`` over ``(eps, 1 - eps)`` so the cloner constraint is
    never inverted.
    """
    n = _check_n(n)
    if tol < 0:
        raise ValidationError("tol must be non-negative")

    def gap(beta_t: float) -> float:
        info_bob, info_eve = qudit_information(qudit_params_from_beta(n, beta_t))
        return info_bob - info_eve

    beta_t = bisect(gap, BRACKET_EPS, 1.0 - BRACKET_EPS, tol)
    params = qudit_params_from_beta(n, beta_t)
    D, _, _ = qudit_disturbances(params)
    result = BorderResult(
        protocol=Protocol.QUDIT_MUB,
        n=n,
        d=2**n,
        border_disturbance=D,
        per_qubit_pb=None,
        crossing_params=params,
        residual=abs(gap(beta_t)),
    )
    _check_residual(result)
    return result


def border(protocol: Protocol | str, n: int) -> BorderResult:
    protocol = Protocol(protocol)
    if protocol is Protocol.QUBIT_STRING:
        return qubit_string_border(n)
    return qudit_border(n)


def _check_residual(result: BorderResult) -> None:
    if not result.residual < RESIDUAL_TOL:
        raise SolverError(f"{result.protocol.value} n={result.n}: residual {result.residual:.3e}")
    if not 0.0 < result.border_disturbance < 1.0:
        raise SolverError(f"border disturbance {result.border_disturbance!r} outside (0, 1)")


def figure1_table(max_n: int) -> list[tuple[int, int, float, float]]:
    """Rows ``(n, d, D_tilde, D_mub)`` for n = 1..max_n."""
    max_n = _check_n(max_n)
    rows = []
    for n in range(1, max_n + 1):
        rows.append(
            (n, 2**n, qubit_string_border(n).border_disturbance, qudit_border(n).border_disturbance)
        )
    return rows


def sifting_rates(n: int) -> RateComparison:
    """Fraction of transmitted systems that survive basis sifting, per protocol."""
    if int(n) != n or n < 1:
        raise ValidationError(f"n must be a positive integer, got {n!r}")
    n = int(n)
    return RateComparison(
        n=n,
        qubit_sift_fraction=Fraction(1, 3),
        qudit_sift_fraction=Fraction(1, 2**n + 1),
        qubits_per_sifted_dit=3 * n,
    )


def border_beta(protocol: Protocol | str, n: int) -> float:
    """Cloner ``beta`` (or ``beta_t``) that puts Eve exactly at the border."""
    params = border(protocol, n).crossing_params
    return params.beta if isinstance(params, ClonerParams) else params.beta_t


__all__ = [
    "BorderResult",
    "Protocol",
    "RateComparison",
    "bisect",
    "border",
    "border_beta",
    "figure1_table",
    "qubit_border",
    "qubit_string_border",
    "qudit_border",
    "sifting_rates",
]
