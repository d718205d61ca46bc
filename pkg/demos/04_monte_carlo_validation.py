"""Simulated sessions against the closed forms.

Run with ``python demos/04_monte_carlo_validation.py``.
"""

# %%
from dimcrypt.quantum_sim import Attack, SessionConfig, analytic_predictions, run_session, z_scores
from dimcrypt.security_solver import border_beta

ROUNDS = 10**6

# %% [markdown]
# Eve tunes her cloner to sit exactly on the border, and we check that the
# sifted statistics land where the analysis says they should.

# %%
cases = [
    SessionConfig("qubit-string", 2, ROUNDS, Attack("cloner", border_beta("qubit-string", 2)), seed=1),
    SessionConfig("qudit-mub", 2, ROUNDS, Attack("cloner", border_beta("qudit-mub", 2)), seed=2),
    SessionConfig("qubit-string", 1, ROUNDS, Attack("intercept-resend"), seed=3),
    SessionConfig("qudit-mub", 2, ROUNDS, Attack("intercept-resend"), seed=4),
]
for cfg in cases:
    stats = run_session(cfg)
    pred = analytic_predictions(cfg)
    z = z_scores(stats, pred)
    print(f"\n{cfg.protocol.value} n={cfg.n} attack={cfg.attack.kind.value}")
    print(f"  sifted    {stats.sift_fraction:.5f}  (expect {pred['sift_fraction']:.5f}, z={z['sift_fraction']:+.2f})")
    print(f"  qber      {stats.qber:.5f}  (expect {pred['qber']:.5f}, z={z['qber']:+.2f})")
    print(f"  dit error {stats.dit_disturbance:.5f}  (expect {pred['dit_disturbance']:.5f}, z={z['dit_disturbance']:+.2f})")
    print(f"  I_B       {stats.bob_info_empirical:.4f}  (expect {pred['bob_info']:.4f})")
    print(f"  I_E       {stats.eve_info_empirical:.4f}  (expect {pred['eve_info']:.4f})")
