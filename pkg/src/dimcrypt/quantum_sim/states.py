"""Three-qubit state vectors for the cloning attack and single-qubit projections.

A :class:`JointState` stores amplitudes over ``B (x) E (x) M`` with each qubit
indexed in one *active* basis; :meth:`JointState.vector` maps it to the
computational representation so it can be projected onto any product of bases.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from ..errors import ValidationError
from ..qubit_attack import ClonerParams

NORM_TOL = 1e-12
_S = 1.0 / np.sqrt(2.0)


class Basis(enum.IntEnum):
    COMPUTATIONAL = 0
    DIAGONAL = 1
    CIRCULAR = 2

    @property
    def matrix(self) -> np.ndarray:
        """Unitary whose columns are the basis states ``|psi_0>, |psi_1>``."""
        return _BASIS_MATRICES[self]


_BASIS_MATRICES = {
    Basis.COMPUTATIONAL: np.eye(2, dtype=complex),
    Basis.DIAGONAL: _S * np.array([[1, 1], [1, -1]], dtype=complex),
    Basis.CIRCULAR: _S * np.array([[1, 1], [1j, -1j]], dtype=complex),
}
for _m in _BASIS_MATRICES.values():
    _m.setflags(write=False)


def basis_state(basis: Basis, k: int) -> np.ndarray:
    return Basis(basis).matrix[:, k]


@dataclass(frozen=True)
class JointState:
    """Normalized B(x)E(x)M amplitudes, index ``4*b + 2*e + m`` in ``basis``."""

    amplitudes: np.ndarray
    basis: Basis

    def __post_init__(self) -> None:
        amps = np.asarray(self.amplitudes, dtype=complex)
        if amps.shape != (8,):
            raise ValidationError(f"expected 8 amplitudes, got shape {amps.shape}")
        norm = float(np.vdot(amps, amps).real)
        if abs(norm - 1.0) > NORM_TOL:
            raise ValidationError(f"state norm^2 is {norm!r}")
        object.__setattr__(self, "amplitudes", amps)

    def vector(self) -> np.ndarray:
        """Amplitudes in the computational basis."""
        u = self.basis.matrix
        return np.kron(np.kron(u, u), u) @ self.amplitudes


def clone_attack(k: int, basis: Basis, params: ClonerParams) -> JointState:
    """Output of the asymmetric cloner on ``|psi_k>``, written in ``basis``.

    ``|k>_B [a/sqrt2 (|00> + |11>) + b/sqrt2 |kk>]_EM + b/sqrt2 |k+1>_B |k>_E |k+1>_M``
    """
    if k not in (0, 1):
        raise ValidationError(f"k must be 0 or 1, got {k!r}")
    a, b = params.alpha, params.beta
    amps = np.zeros(8, dtype=complex)
    flip = 1 - k
    amps[4 * k + 0] += a * _S
    amps[4 * k + 3] += a * _S
    amps[4 * k + 2 * k + k] += b * _S
    amps[4 * flip + 2 * k + flip] += b * _S
    return JointState(amps, Basis(basis))


def joint_outcome_probabilities(
    state: JointState,
    bob_basis: Basis | None = None,
    eve_basis: Basis | None = None,
) -> np.ndarray:
    """Born probabilities of ``(b, e, m)``, flat index ``4*b + 2*e + m``.

    B is measured in ``bob_basis`` and both E and M in ``eve_basis``; each
    defaults to the state's own basis.  Computed by explicit projection of the
    computational-basis vector.
    """
    ub = Basis(state.basis if bob_basis is None else bob_basis).matrix
    ue = Basis(state.basis if eve_basis is None else eve_basis).matrix
    proj = np.kron(np.kron(ub, ue), ue).conj().T
    amps = proj @ state.vector()
    return np.abs(amps) ** 2


def measure_joint(state: JointState, rng: np.random.Generator) -> tuple[int, int, int]:
    """Sample ``(bob_bit, e_bit, m_bit)`` in the state's basis."""
    cdf = np.cumsum(np.abs(state.amplitudes) ** 2)
    idx = min(int(np.searchsorted(cdf, rng.random() * cdf[-1], side="right")), 7)
    return idx >> 2, (idx >> 1) & 1, idx & 1


@lru_cache(maxsize=None)
def overlap_table() -> np.ndarray:
    """``T[a, k, b, j] = |<phi_j^b | psi_k^a>|**2`` for all basis pairs."""
    t = np.empty((3, 2, 3, 2))
    for a in Basis:
        for b in Basis:
            t[a, :, b, :] = (np.abs(b.matrix.conj().T @ a.matrix) ** 2).T
    t.setflags(write=False)
    return t


@lru_cache(maxsize=None)
def cloner_outcome_table(alpha: float, beta: float) -> np.ndarray:
    """``T[a, k, b, :]``: outcome probabilities for Alice basis a, bit k, Bob basis b.

    Eve always measures in Alice's basis (after disclosure).
    """
    params = ClonerParams(alpha, beta)
    t = np.empty((3, 2, 3, 8))
    for a in Basis:
        for k in (0, 1):
            state = clone_attack(k, a, params)
            for b in Basis:
                t[a, k, b] = joint_outcome_probabilities(state, bob_basis=b)
    t.setflags(write=False)
    return t


class InterceptResendRound(NamedTuple):
    eve_basis: Basis
    eve_bit: int
    bob_bit: int
    bob_error_probability: float


def intercept_resend_round(
    bit: int, alice_basis: Basis, rng: np.random.Generator
) -> InterceptResendRound:
    """One intercept-resend round; Bob measures in Alice's basis (a sifted round)."""
    if bit not in (0, 1):
        raise ValidationError(f"bit must be 0 or 1, got {bit!r}")
    alice_basis = Basis(alice_basis)
    eve_basis = Basis(int(rng.integers(3)))
    ov = overlap_table()
    eve_bit = int(rng.random() >= ov[alice_basis, bit, eve_basis, 0])
    p_bob = ov[eve_basis, eve_bit, alice_basis]
    bob_bit = int(rng.random() >= p_bob[0])
    return InterceptResendRound(eve_basis, eve_bit, bob_bit, float(p_bob[1 - bit]))
