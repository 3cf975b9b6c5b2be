"""Weighted Spearman footrule and weighted Kendall tau.

For an aligned pair with reference ranks ``i = 1..n`` and second-list ranks
``pi[i]``::

    S_w = sum_i w_i * |i - pi[i]|
    K_w = sum_{i<j, pi[i] > pi[j]} (w_i + w_j) / 2

Weights belong to elements, so ``w_i`` is the weight of the token whose
reference rank is ``i``. With integer weights every quantity below is
computed exactly (``2 * K_w`` is an integer).
"""
from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Optional

import numba as nb
import numpy as np

from .core import AlignedPair, RankedList, WeightTable, align, complete_pair

__all__ = [
    "UndefinedNormalization",
    "MeasureReport",
    "footrule_weighted",
    "footrule_denominator",
    "footrule_normalized",
    "kendall_weighted",
    "kendall_denominator",
    "kendall_normalized",
    "signed_scale",
    "compare",
    "twice_kendall",
    "dg_tolerance",
]

RTOL = 1e-9


class UndefinedNormalization(ArithmeticError):
    """Normalizing denominator is zero (single-element lists)."""


def _scalar(x):
    return int(x) if isinstance(x, (np.integer, int)) else float(x)


def footrule_weighted(pair: AlignedPair, w: WeightTable | None = None):
    ranks = pair.ranks_array()
    wts = pair.weights(w)
    return _scalar(np.sum(wts * np.abs(np.arange(pair.n) - ranks)))


def footrule_denominator(n: int, w: WeightTable | None = None, universe=None):
    """Footrule of the full reversal, weighted by reference order.

    Note this is not the maximum of ``S_w`` once weights differ: the heavy
    middle element of a reversal never moves.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if universe is None:
        wts = np.ones(n, dtype=np.int64)
    else:
        if len(universe) != n:
            raise ValueError("universe length does not match n")
        wts = (w or WeightTable()).vector(universe)
    i = np.arange(1, n + 1)
    return _scalar(np.sum(wts * np.abs(i - (n - i + 1))))


def footrule_normalized(pair: AlignedPair, w: WeightTable | None = None) -> float:
    denom = footrule_denominator(pair.n, w, pair.universe)
    if denom == 0:
        raise UndefinedNormalization("footrule denominator is zero")
    return footrule_weighted(pair, w) / denom


@nb.njit(cache=True)
def _twice_kendall_naive(ranks, wts):
    # literal double loop over i < j
    n = ranks.size
    total = wts[0] - wts[0]
    for i in range(n):
        ri, wi = ranks[i], wts[i]
        for j in range(i + 1, n):
            total += (ri > ranks[j]) * (wi + wts[j])
    return total


@nb.njit(cache=True)
def _twice_kendall_fast(ranks, wts):
    """O(n log n) weighted inversion sum, ``sum over inversions of w_i + w_j``.

    Scans the list in reference order with a Fenwick tree holding, per rank,
    the count and the weight of elements already seen. The tree is indexed by
    reversed rank so one prefix query returns the earlier elements with a
    larger rank, i.e. element i's inversions: it contributes
    ``count * w_i`` plus their weight sum.
    """
    n = ranks.size
    cnt = np.zeros(n + 1, dtype=np.int64)
    wsum = np.zeros(n + 1, dtype=wts.dtype)
    total = wsum[0]
    for i in range(n):
        slot = n - ranks[i]  # 1-based; larger ranks get smaller slots
        above_c = 0
        above_w = wsum[0]
        k = slot - 1
        while k > 0:
            above_c += cnt[k]
            above_w += wsum[k]
            k -= k & -k
        total += above_c * wts[i] + above_w
        k = slot
        while k <= n:
            cnt[k] += 1
            wsum[k] += wts[i]
            k += k & -k
    return total


def twice_kendall(pair: AlignedPair, w: WeightTable | None = None, algo: str = "fast"):
    """``2 * K_w``; an exact ``int`` when all weights are integral.

    ``algo`` is ``"fast"`` (Fenwick tree) or ``"naive"`` (all pairs).
    """
    ranks = pair.ranks_array()
    wts = pair.weights(w)
    if pair.n == 0:
        return 0
    if algo == "fast":
        return _scalar(_twice_kendall_fast(ranks, wts))
    if algo == "naive":
        return _scalar(_twice_kendall_naive(ranks, wts))
    raise ValueError(f"unknown algorithm {algo!r}")


def kendall_weighted(pair: AlignedPair, w: WeightTable | None = None, algo: str = "fast") -> float:
    return twice_kendall(pair, w, algo) / 2


def kendall_denominator(w: WeightTable | None, universe) -> float:
    """Sum of ``(w_i + w_j) / 2`` over all pairs, i.e. ``(n - 1) / 2 * sum(w)``."""
    n = len(universe)
    if n < 1:
        raise ValueError("universe must be non-empty")
    total = _scalar(np.sum((w or WeightTable()).vector(universe)))
    return (n - 1) * total / 2


def kendall_normalized(pair: AlignedPair, w: WeightTable | None = None) -> float:
    denom = kendall_denominator(w, pair.universe)
    if denom == 0:
        raise UndefinedNormalization("kendall denominator is zero")
    return kendall_weighted(pair, w) / denom


def signed_scale(v: float) -> float:
    """Map a normalized distance in [0, 1] to an agreement score in [-1, 1]."""
    if not (0.0 <= v <= 1.0):
        raise ValueError(f"value {v!r} outside [0, 1]")
    return 1 - 2 * v


def dg_tolerance(footrule_raw) -> float:
    return RTOL * max(1.0, float(footrule_raw))


@dataclass(frozen=True)
class MeasureReport:
    n: int
    footrule_raw: float
    footrule_denom: float
    footrule_norm: Optional[float]
    kendall_raw: float
    kendall_denom: float
    kendall_norm: Optional[float]
    ratio: Optional[float]
    dg_lower: bool
    dg_upper: bool
    footrule_overflow: bool

    @property
    def dg_holds(self) -> bool:
        return self.dg_lower and self.dg_upper

    def to_dict(self) -> dict:
        d = asdict(self)
        d["dg_holds"] = self.dg_holds
        return d


def report_for_pair(pair: AlignedPair, w: WeightTable | None = None) -> MeasureReport:
    s_raw = footrule_weighted(pair, w)
    k2 = twice_kendall(pair, w)
    k_raw = k2 / 2
    s_den = footrule_denominator(pair.n, w, pair.universe)
    k_den = kendall_denominator(w, pair.universe)
    s_norm = s_raw / s_den if s_den else None
    k_norm = k_raw / k_den if k_den else None
    tol = dg_tolerance(s_raw)
    return MeasureReport(
        n=pair.n,
        footrule_raw=s_raw,
        footrule_denom=s_den,
        footrule_norm=s_norm,
        kendall_raw=k_raw,
        kendall_denom=k_den,
        kendall_norm=k_norm,
        ratio=s_raw / k_raw if k_raw else None,
        dg_lower=k_raw <= s_raw + tol,
        dg_upper=s_raw <= k2 + tol,
        footrule_overflow=s_norm is not None and s_norm > 1 + RTOL,
    )


def compare(a: RankedList, b: RankedList, w: WeightTable | None = None) -> MeasureReport:
    """Complete, align and measure two (possibly partial) ranked lists."""
    return report_for_pair(align(*complete_pair(a, b)), w)

