"""Attribution scoring primitives.

Null explanations are scored by the IQR fence rule: a score vector passes
(value 1) only when no entry lies below Q1 - k*IQR or above Q3 + k*IQR.
Subgraph explanations are scored by AUROC in the Mann-Whitney formulation
with half-credit for ties, so any strictly increasing transform of the
scores leaves the result unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

QUARTILE_METHODS = ("linear", "lower", "higher", "nearest", "midpoint")


@dataclass(frozen=True)
class NEConfig:
    fence_multiplier: float = 1.5
    quartile_method: str = "linear"  # numpy's "linear" is the classic type-7 rule

    def __post_init__(self):
        if self.fence_multiplier <= 0:
            raise ValueError("fence multiplier must be positive")
        if self.quartile_method not in QUARTILE_METHODS:
            raise ValueError(
                f"unknown quartile method {self.quartile_method!r}; "
                f"choose one of {QUARTILE_METHODS}"
            )


class DegenerateMaskError(ValueError):
    """Mask is all-ones or all-zeros: AUROC is undefined for it."""


def _as_finite_array(values, name: str) -> np.ndarray:
    arr = np.asarray(values, dtype=float)
    if arr.ndim != 1 or arr.size == 0:
        raise ValueError(f"{name} must be a nonempty 1-D vector")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains non-finite values")
    return arr


def ne_score(scores, cfg: NEConfig = NEConfig()) -> int:
    """1 when the vector has no IQR-fence outliers, else 0."""
    arr = _as_finite_array(scores, "scores")
    q1, q3 = np.percentile(arr, [25.0, 75.0], method=cfg.quartile_method)
    iqr = q3 - q1
    low = q1 - cfg.fence_multiplier * iqr
    high = q3 + cfg.fence_multiplier * iqr
    return int(bool(np.all((arr >= low) & (arr <= high))))


def _average_ranks(arr: np.ndarray) -> np.ndarray:
    """Ranks 1..n with ties sharing their average rank."""
    order = np.argsort(arr, kind="stable")
    ranks = np.empty(arr.size, dtype=float)
    sorted_vals = arr[order]
    i = 0
    while i < arr.size:
        j = i
        while j + 1 < arr.size and sorted_vals[j + 1] == sorted_vals[i]:
            j += 1
        ranks[order[i : j + 1]] = 0.5 * (i + j) + 1.0
        i = j + 1
    return ranks


def _check_mask(scores: np.ndarray, mask) -> np.ndarray:
    mask_arr = np.asarray(mask)
    if mask_arr.shape != scores.shape:
        raise ValueError(
            f"scores and mask lengths differ: {scores.size} vs {mask_arr.size}"
        )
    if not np.all(np.isin(mask_arr, (0, 1))):
        raise ValueError("mask must contain only 0/1 values")
    n_pos = int(mask_arr.sum())
    if n_pos == 0 or n_pos == mask_arr.size:
        raise DegenerateMaskError("degenerate mask: needs at least one 0 and one 1")
    return mask_arr.astype(bool)


def auroc(scores, mask) -> float:
    """P(random relevant element outranks a random irrelevant one), ties half."""
    arr = _as_finite_array(scores, "scores")
    pos = _check_mask(arr, mask)
    ranks = _average_ranks(arr)
    n_pos = int(pos.sum())
    n_neg = arr.size - n_pos
    rank_sum = float(ranks[pos].sum())
    return (rank_sum - n_pos * (n_pos + 1) / 2.0) / (n_pos * n_neg)


def average_precision(scores, mask) -> float:
    """Precision averaged at each relevant element, scores descending.

    Ties are broken by the stable original index order.
    """
    arr = _as_finite_array(scores, "scores")
    pos = _check_mask(arr, mask)
    order = np.argsort(-arr, kind="stable")
    hits = 0
    total = 0.0
    for position, index in enumerate(order, start=1):
        if pos[index]:
            hits += 1
            total += hits / position
    return total / hits


def f1_score(labels, preds) -> float:
    """2TP / (2TP + FP + FN); 0 when the denominator is 0."""
    y = np.asarray(labels).astype(bool)
    p = np.asarray(preds).astype(bool)
    if y.shape != p.shape or y.ndim != 1 or y.size == 0:
        raise ValueError("labels and predictions must be equal-length nonempty vectors")
    tp = int(np.sum(y & p))
    fp = int(np.sum(~y & p))
    fn = int(np.sum(y & ~p))
    denominator = 2 * tp + fp + fn
    if denominator == 0:
        return 0.0
    return 2 * tp / denominator
