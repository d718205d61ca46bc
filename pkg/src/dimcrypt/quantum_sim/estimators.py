"""Plug-in information estimators from sampled symbol tables.

Symbols are 2**n-valued and the channels considered are symmetric under
relabeling ``v -> v xor a``, so every row of a contingency table can be
shifted to the reference symbol 0 and pooled into one histogram of
*offsets* ``a xor r``.  Bob's information is ``n - H(pooled offsets)``; Eve,
who also sees flag patterns, gets ``n - sum_f w_f H(offsets | f)``.
"""

from __future__ import annotations

import math
from collections.abc import Mapping

import numpy as np

from ..errors import ValidationError
from ..infotheory import entropy_of_counts


def _symbol_bits(d: int) -> int:
    n = d.bit_length() - 1
    if d < 2 or 2**n != d:
        raise ValidationError(f"symbol alphabet size must be a power of two >= 2, got {d}")
    return n


def offset_histograms(joint_counts) -> np.ndarray:
    """Fold a ``(d, d)`` or ``(F, d, d)`` contingency table into offset histograms.

    Returns shape ``(F, d)`` (``F = 1`` for a 2-D table).
    """
    c = np.asarray(joint_counts, dtype=float)
    if c.ndim == 2:
        c = c[None]
    if c.ndim != 3 or c.shape[1] != c.shape[2]:
        raise ValidationError(f"expected a (d, d) or (F, d, d) table, got shape {np.shape(joint_counts)}")
    if np.any(c < 0):
        raise ValidationError("counts must be non-negative")
    d = c.shape[1]
    _symbol_bits(d)
    offsets = np.bitwise_xor.outer(np.arange(d), np.arange(d))
    hist = np.zeros((c.shape[0], d))
    for f in range(c.shape[0]):
        np.add.at(hist[f], offsets, c[f])
    return hist


def information_from_histograms(n: int, hists) -> float:
    """``n - sum_f (N_f / N) H(hist_f)`` over the non-empty histograms."""
    hists = [np.asarray(h, dtype=float) for h in hists]
    sizes = np.array([h.sum() for h in hists])
    total = sizes.sum()
    if total <= 0:
        raise ValidationError("contingency table is empty")
    cond = sum(s / total * entropy_of_counts(h) for s, h in zip(sizes, hists) if s > 0)
    return n - cond


def bias_bound_from_histograms(hists) -> float:
    """First-order (Miller-Madow) bias of the plug-in information estimate, in bits."""
    hists = [np.asarray(h, dtype=float) for h in hists]
    total = sum(h.sum() for h in hists)
    if total <= 0:
        raise ValidationError("contingency table is empty")
    cells = sum(max(int(np.count_nonzero(h)) - 1, 0) for h in hists)
    return cells / (2.0 * total * math.log(2.0))


def empirical_information(joint_counts) -> float:
    """Plug-in information (bits per symbol) from a contingency table.

    Parameters
    ----------
    joint_counts : array_like
        Either ``counts[alice, receiver]`` of shape ``(d, d)``, treated the way
        Bob sees it (no side information), or ``counts[flag, alice, receiver]``
        of shape ``(F, d, d)``, where each flag pattern is averaged separately
        as Eve does.

    Examples
    --------
    >>> empirical_information(np.eye(4) * 10)
    2.0
    """
    hists = offset_histograms(joint_counts)
    n = _symbol_bits(hists.shape[1])
    return information_from_histograms(n, hists)


def plugin_bias_bound(joint_counts) -> float:
    """Bias bound to report alongside :func:`empirical_information`."""
    return bias_bound_from_histograms(offset_histograms(joint_counts))


def counter_histograms(counter: Mapping[tuple[int, int], int]) -> list[np.ndarray]:
    """Group a sparse ``{(flag, offset): count}`` tally into per-flag histograms."""
    by_flag: dict[int, list[int]] = {}
    for (flag, _), count in sorted(counter.items()):
        by_flag.setdefault(flag, []).append(count)
    return [np.asarray(v, dtype=float) for _, v in sorted(by_flag.items())]
