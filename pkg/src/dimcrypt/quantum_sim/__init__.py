"""State-vector oracle for the qubit cloner and Monte Carlo protocol sessions."""

from .estimators import empirical_information, plugin_bias_bound
from .session import (
    Attack,
    AttackKind,
    SessionConfig,
    SessionStats,
    analytic_predictions,
    run_session,
    z_scores,
)
from .states import (
    Basis,
    InterceptResendRound,
    JointState,
    basis_state,
    clone_attack,
    intercept_resend_round,
    joint_outcome_probabilities,
    measure_joint,
)

__all__ = [
    "Attack",
    "AttackKind",
    "Basis",
    "InterceptResendRound",
    "JointState",
    "SessionConfig",
    "SessionStats",
    "analytic_predictions",
    "basis_state",
    "clone_attack",
    "empirical_information",
    "intercept_resend_round",
    "joint_outcome_probabilities",
    "measure_joint",
    "plugin_bias_bound",
    "run_session",
    "z_scores",
]
