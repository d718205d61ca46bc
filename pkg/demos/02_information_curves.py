"""Bob's and Eve's information per quart for both protocols, and where they cross.

Run with ``python demos/02_information_curves.py``.
"""

# %%
import numpy as np

from dimcrypt import (
    params_from_beta,
    qudit_disturbances,
    qudit_information,
    qudit_params_from_beta,
    string_information,
)
from dimcrypt.security_solver import qubit_string_border, qudit_border

# %% [markdown]
# Sweep the cloner amplitude from "no attack" (beta = 0) to "full copy" (beta = 1).
# For qubit pairs the symbol error rate is 1 - (1 - pb)^2.

# %%
print(f"{'beta':>6} | {'D~ qubits':>9} {'I_B':>7} {'I_E':>7} | {'D qudit':>8} {'I_B':>7} {'I_E':>7}")
for beta in np.linspace(0, 1, 11):
    pt = string_information(2, params_from_beta(beta))
    qp = qudit_params_from_beta(2, beta)
    ib, ie = qudit_information(qp)
    print(
        f"{beta:6.2f} | {pt.disturbance:9.4f} {pt.info_bob:7.4f} {pt.info_eve:7.4f} "
        f"| {qudit_disturbances(qp)[0]:8.4f} {ib:7.4f} {ie:7.4f}"
    )

# %% [markdown]
# The crossings, solved by bisection.  The qubit pair tolerates a larger
# symbol error rate before Eve catches up with Bob.

# %%
q = qubit_string_border(2)
m = qudit_border(2)
print(f"qubit pair : pb = {q.per_qubit_pb:.4f}, D~ = {q.border_disturbance:.4f}")
print(f"4-level MUB: D  = {m.border_disturbance:.4f}")
