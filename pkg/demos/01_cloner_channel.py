"""The asymmetric cloner as a three-qubit state, and the channel it induces.

Run with ``python demos/01_cloner_channel.py``.
"""

# %%
import numpy as np

from dimcrypt import outcome_probabilities, params_from_beta
from dimcrypt.quantum_sim import Basis, clone_attack, joint_outcome_probabilities

# %% [markdown]
# Pick the symmetric cloner (alpha = beta).  Eve and Bob then err equally often
# on the rounds where Eve cannot tell what happened.

# %%
params = params_from_beta(1 / np.sqrt(3))
print(f"alpha = {params.alpha:.6f}, beta = {params.beta:.6f}")
print(outcome_probabilities(params))

# %% [markdown]
# Build the state for bit 1 sent in the circular basis and read off Born
# probabilities over (Bob, E, M), each measured in Alice's basis.

# %%
state = clone_attack(1, Basis.CIRCULAR, params)
probs = joint_outcome_probabilities(state).reshape(2, 2, 2)
for b in (0, 1):
    for e in (0, 1):
        for m in (0, 1):
            if probs[b, e, m] > 1e-15:
                print(f"B={b} E={e} M={m}  flag={e ^ m}  p={probs[b, e, m]:.6f}")

# %% [markdown]
# Summing the rows reproduces the closed form: both correct, only Bob correct,
# only Eve correct.

# %%
k = 1
print("p0 =", probs[k, k].sum(), " pe =", probs[k, 1 - k].sum(), " pb =", probs[1 - k].sum())

# %% [markdown]
# Bob measuring in a different basis than Alice sees a fair coin, cloner or not.

# %%
print(joint_outcome_probabilities(state, bob_basis=Basis.DIAGONAL).reshape(2, 4).sum(axis=1))
