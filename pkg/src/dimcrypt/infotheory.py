"""Entropy primitives in bits.

All analytic code paths go through :func:`shannon_entropy` or
:func:`binary_entropy`; the Monte Carlo estimators reuse :func:`entropy_of_counts`.
"""

from __future__ import annotations

import numpy as np

from .errors import ValidationError

#: Acceptance tolerance on ``|sum(p) - 1|`` for a probability vector.
NORM_TOL = 1e-9
#: Entries below this are treated as exact zeros (0 log 0 = 0).
ZERO_CUTOFF = 1e-300


def as_prob_vector(p) -> np.ndarray:
    """Validate ``p`` as a probability vector and return it as a float array.

    Entries must lie in [0, 1] and sum to one within :data:`NORM_TOL`.
    Nothing is renormalized.
    """
    arr = np.asarray(p, dtype=float)
    if arr.ndim != 1 or arr.size == 0:
        raise ValidationError(f"probability vector must be 1-D and non-empty, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValidationError("probability vector has non-finite entries")
    if np.any(arr < 0.0) or np.any(arr > 1.0):
        raise ValidationError(f"probability entries must lie in [0, 1], got {arr}")
    total = float(arr.sum())
    if abs(total - 1.0) > NORM_TOL:
        raise ValidationError(f"probabilities sum to {total!r}, not 1")
    return arr


def xlog2x(x) -> np.ndarray | float:
    """``x * log2(x)`` with the limit convention ``0 * log2(0) = 0``."""
    arr = np.asarray(x, dtype=float)
    pos = arr > ZERO_CUTOFF
    out = np.zeros_like(arr)
    out[pos] = arr[pos] * np.log2(arr[pos])
    return float(out) if out.ndim == 0 else out


def shannon_entropy(p) -> float:
    """Shannon entropy ``-sum p_i log2 p_i`` of a probability vector, in bits.

    >>> shannon_entropy([0.25, 0.25, 0.25, 0.25])
    2.0
    """
    arr = as_prob_vector(p)
    h = -float(np.sum(xlog2x(arr)))
    # -0.0 and tiny negative round-off on point masses
    return max(h, 0.0)


def binary_entropy(q: float) -> float:
    """Binary entropy ``h(q) = -q log2 q - (1-q) log2 (1-q)``."""
    q = float(q)
    if not 0.0 <= q <= 1.0:
        raise ValidationError(f"q must lie in [0, 1], got {q!r}")
    return max(-(xlog2x(q) + xlog2x(1.0 - q)), 0.0)


def entropy_of_counts(counts) -> float:
    """Plug-in entropy (bits) of a histogram of non-negative counts."""
    c = np.asarray(counts, dtype=float).ravel()
    total = c.sum()
    if total <= 0:
        raise ValidationError("histogram is empty")
    return max(-float(np.sum(xlog2x(c / total))), 0.0)
