"""Paired one-sided significance testing across explainers.

The Wilcoxon signed-rank test runs on paired per-graph scores with average
ranks on ties, alternative "median(x - y) > 0". For n <= 25 nonzero
differences the p-value comes from the exact null distribution (a subset-sum
count over doubled ranks, identical to enumerating all 2^n sign patterns);
above that, the normal approximation with continuity and tie correction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .metrics import _average_ranks

EXACT_LIMIT = 25


class InsufficientPairsError(ValueError):
    pass


@dataclass(frozen=True)
class WilcoxonResult:
    p_value: float
    statistic: float  # W+: rank sum of positive differences
    n_nonzero: int
    mode: str  # "exact" or "normal"


def wilcoxon_one_sided(x, y) -> WilcoxonResult:
    """Test whether paired sample x is shifted above y."""
    xa = np.asarray(x, dtype=float)
    ya = np.asarray(y, dtype=float)
    if xa.shape != ya.shape or xa.ndim != 1:
        raise ValueError("x and y must be equal-length 1-D samples")
    if not (np.all(np.isfinite(xa)) and np.all(np.isfinite(ya))):
        raise ValueError("samples contain non-finite values")
    d = xa - ya
    d = d[d != 0.0]
    n = d.size
    if n == 0:
        raise InsufficientPairsError("no nonzero differences")
    if n < 5:
        raise InsufficientPairsError(
            f"too few nonzero differences ({n}); need at least 5"
        )
    ranks = _average_ranks(np.abs(d))
    w_plus = float(ranks[d > 0].sum())

    if n <= EXACT_LIMIT:
        return WilcoxonResult(
            p_value=_exact_p_ge(ranks, w_plus), statistic=w_plus,
            n_nonzero=n, mode="exact",
        )

    mean = n * (n + 1) / 4.0
    # Tie correction: grouped ranks shrink the null variance.
    _, tie_counts = np.unique(ranks, return_counts=True)
    variance = n * (n + 1) * (2 * n + 1) / 24.0 - float(
        np.sum(tie_counts**3 - tie_counts)
    ) / 48.0
    z = (w_plus - 0.5 - mean) / math.sqrt(variance)
    return WilcoxonResult(
        p_value=0.5 * math.erfc(z / math.sqrt(2.0)), statistic=w_plus,
        n_nonzero=n, mode="normal",
    )


def _exact_p_ge(ranks: np.ndarray, w_plus: float) -> float:
    """P(W+ >= observed) under the exact null (each sign independently +/-).

    Works on doubled ranks so tied average ranks (k or k + 1/2) stay integral.
    Counting subsets by sum equals enumerating all 2^n sign assignments.
    """
    doubled = [int(round(2 * r)) for r in ranks]
    target = int(round(2 * w_plus))
    total = sum(doubled)
    counts = [0] * (total + 1)
    counts[0] = 1
    for r in doubled:
        for s in range(total, r - 1, -1):
            counts[s] += counts[s - r]
    at_least = sum(counts[target:])
    return at_least / (1 << len(doubled))


@dataclass
class SignificanceMatrix:
    explainers: list[str]
    means: dict[str, float]
    best: str
    # p_values[a][b]: one-sided p for "a shifted above b"; 1.0 when untestable
    # (identical samples or fewer than 5 nonzero differences).
    p_values: dict[str, dict[str, float]]
    n_nonzero: dict[str, dict[str, int]]
    alpha: float
    not_significantly_lower: dict[str, bool]


def _pairwise_p(x: np.ndarray, y: np.ndarray) -> tuple[float, int]:
    try:
        result = wilcoxon_one_sided(x, y)
        return result.p_value, result.n_nonzero
    except InsufficientPairsError:
        return 1.0, int(np.sum(np.asarray(x) != np.asarray(y)))


def compare_explainers(tables: dict[str, dict], alpha: float = 0.05) -> SignificanceMatrix:
    """Rank aligned per-graph score tables and flag ties with the best.

    ``tables`` maps explainer name to {graph key: score}; all tables must
    cover the same graph keys. An explainer is flagged when the one-sided
    test of "best above it" cannot reject at ``alpha``.
    """
    if len(tables) < 2:
        raise ValueError("need at least two explainers to compare")
    names = sorted(tables)
    key_sets = {name: set(table) for name, table in tables.items()}
    reference = key_sets[names[0]]
    for name in names[1:]:
        if key_sets[name] != reference:
            missing = sorted(reference ^ key_sets[name])[:5]
            raise ValueError(
                f"explainer {name!r} scores a different graph set "
                f"(first mismatches: {missing})"
            )
    if not reference:
        raise ValueError("score tables are empty")
    keys = sorted(reference)
    vectors = {name: np.array([tables[name][k] for k in keys]) for name in names}
    means = {name: float(vectors[name].mean()) for name in names}
    best = max(names, key=lambda name: (means[name], name))

    p_values: dict[str, dict[str, float]] = {}
    n_nonzero: dict[str, dict[str, int]] = {}
    for a in names:
        p_values[a] = {}
        n_nonzero[a] = {}
        for b in names:
            if a == b:
                p, n = 1.0, 0
            else:
                p, n = _pairwise_p(vectors[a], vectors[b])
            p_values[a][b] = p
            n_nonzero[a][b] = n

    flags = {name: bool(p_values[best][name] >= alpha) for name in names}
    return SignificanceMatrix(
        explainers=names, means=means, best=best, p_values=p_values,
        n_nonzero=n_nonzero, alpha=alpha, not_significantly_lower=flags,
    )
