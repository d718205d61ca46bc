"""Border disturbance against symbol size 2^n, for qubit strings and for 2^n-level systems.

Run with ``python demos/03_border_disturbances.py``.  If matplotlib is
installed the table is also drawn to ``border_disturbances.png``.
"""

# %%
from dimcrypt import figure1_table, sifting_rates

rows = figure1_table(12)
print(f"{'n':>3} {'d':>6} {'qubit string':>13} {'MUB qudit':>10} {'sift q/qd':>10}")
for n, d, tilde, mub in rows:
    r = sifting_rates(n)
    print(f"{n:3d} {d:6d} {tilde:13.4f} {mub:10.4f} {str(r.qubit_sift_fraction):>4}/{str(r.qudit_sift_fraction)}")

# %% [markdown]
# Qubit strings keep the higher border for every n >= 2, and from n = 5 on the
# tolerated symbol error rate exceeds one half.

# %%
try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    ns = [r[0] for r in rows]
    fig, ax = plt.subplots(figsize=(5, 3.5))
    ax.plot(ns, [r[2] for r in rows], "x", label="n qubits")
    ax.plot(ns, [r[3] for r in rows], "o", mfc="none", label="$2^n$-level system")
    ax.set_xlabel("n")
    ax.set_ylabel("border disturbance")
    ax.legend()
    fig.tight_layout()
    fig.savefig("border_disturbances.png", dpi=120)
    print("wrote border_disturbances.png")
