"""Security of 2**n-valued keys: strings of qubits versus 2**n-level systems.

Analytic informations and border disturbances for the asymmetric cloning
attack on both protocols, plus a Monte Carlo simulator that checks them.
"""

from .errors import DomainError, SolverError, ValidationError
from .infotheory import binary_entropy, shannon_entropy
from .qubit_attack import (
    ClonerParams,
    OutcomeProbabilities,
    QuartCaseTable,
    StringInfoPoint,
    outcome_probabilities,
    params_from_beta,
    params_from_pb,
    quart_case_table,
    string_information,
    symbol_case_table,
)
from .qudit_attack import (
    QuditAttackPoint,
    QuditClonerParams,
    qudit_attack_point,
    qudit_disturbances,
    qudit_information,
    qudit_params_from_beta,
)
from .security_solver import (
    BorderResult,
    Protocol,
    RateComparison,
    figure1_table,
    qubit_border,
    qubit_string_border,
    qudit_border,
    sifting_rates,
)

__version__ = "0.1.0"
