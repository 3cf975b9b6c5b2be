"""Executable diagnostics for the weighted Diaconis-Graham argument.

The upper bound ``S_w <= 2 K_w`` is argued by walking from the identity to a
permutation through a minimal sequence of adjacent swaps and bounding how
much each swap can raise the footrule. The lower bound splits inversions
into two positional types. This module builds those objects explicitly so
they can be checked on concrete inputs.

The swap walk runs on the position form of the second list: entry ``k`` is
the reference rank of the element at position ``k``. In that form the values
are the elements themselves, so a weight moves with its value and the
footrule of the final state is exactly ``S_w`` of the pair.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .core import AlignedPair, WeightTable
from .measures import dg_tolerance, footrule_weighted, twice_kendall


class SwapCase(str, enum.Enum):
    CASE1 = "CASE1"  # both values at or left of x: delta = w(x) - w(x+1)
    CASE2 = "CASE2"  # both values at or right of x+1: delta = w(x+1) - w(x)
    CASE3 = "CASE3"  # values straddle the swapped slots: delta = w(x) + w(x+1)


@dataclass(frozen=True)
class SwapStep:
    """One adjacent transposition of positions ``index`` and ``index + 1``.

    ``w_left``/``w_right`` are the weights of the values sitting at ``index``
    and ``index + 1`` in ``before``.
    """

    index: int
    before: tuple[int, ...]
    delta: float
    case_label: SwapCase
    w_left: float
    w_right: float

    def case_delta(self) -> float:
        if self.case_label is SwapCase.CASE1:
            return self.w_left - self.w_right
        if self.case_label is SwapCase.CASE2:
            return self.w_right - self.w_left
        return self.w_left + self.w_right


@dataclass(frozen=True)
class TelescopingReport:
    total: float
    footrule: float
    ok: bool
    first_mismatch: Optional[int] = None
    reason: str = ""


@dataclass(frozen=True)
class InversionDecomposition:
    total_inversions: int
    type1: int
    type2: int
    both: int
    neither: int


@dataclass(frozen=True)
class DGReport:
    kendall_raw: float
    footrule_raw: float
    twice_kendall: float
    holds_lower: bool
    holds_upper: bool
    ratio: Optional[float]

    def as_tuple(self):
        return (self.kendall_raw, self.footrule_raw, self.twice_kendall,
                self.holds_lower, self.holds_upper, self.ratio)


def position_form(pair: AlignedPair) -> list[int]:
    """Reference rank of the element at each position of the second list (1-based)."""
    out = [0] * pair.n
    for i, r in enumerate(pair.pi_ranks, 1):
        out[r - 1] = i
    return out


def _classify(x: int, a: int, b: int) -> SwapCase:
    # a < b are the values at positions x and x+1 before the swap
    if b <= x:
        return SwapCase.CASE1
    if a >= x + 1:
        return SwapCase.CASE2
    return SwapCase.CASE3


def minimal_swap_sequence(pair: AlignedPair, w: WeightTable | None = None) -> list[SwapStep]:
    target = position_form(pair)
    wts = pair.weights(w).tolist()

    # left-to-right bubble sort of the target; replaying the swaps backwards
    # walks from the identity to the target, each swap adding one inversion
    work = list(target)
    swaps = []
    for end in range(len(work) - 1, 0, -1):
        moved = False
        for k in range(end):
            if work[k] > work[k + 1]:
                work[k], work[k + 1] = work[k + 1], work[k]
                swaps.append(k)
                moved = True
        if not moved:
            break

    state = list(range(1, pair.n + 1))
    steps = []
    for k in reversed(swaps):
        x = k + 1
        a, b = state[k], state[k + 1]
        wa, wb = wts[a - 1], wts[b - 1]
        delta = (wb * (abs(x - b) - abs(x + 1 - b))
                 + wa * (abs(x + 1 - a) - abs(x - a)))
        steps.append(SwapStep(x, tuple(state), delta, _classify(x, a, b), wa, wb))
        state[k], state[k + 1] = b, a
    return steps


def telescoping_check(steps: list[SwapStep], pair: AlignedPair,
                      w: WeightTable | None = None) -> TelescopingReport:
    """Check that the swap deltas add up to ``S_w`` and follow their case formulas."""
    footrule = footrule_weighted(pair, w)
    tol = dg_tolerance(footrule)
    total = 0
    for pos, step in enumerate(steps):
        if abs(step.delta - step.case_delta()) > tol:
            return TelescopingReport(total, footrule, False, pos,
                                     f"delta {step.delta} != {step.case_label.value} formula {step.case_delta()}")
        if step.delta > step.w_left + step.w_right + tol:
            return TelescopingReport(total, footrule, False, pos, "delta exceeds w(x) + w(x+1)")
        total += step.delta
    if abs(total - footrule) > tol:
        return TelescopingReport(total, footrule, False, len(steps),
                                 f"sum of deltas {total} != footrule {footrule}")
    return TelescopingReport(total, footrule, True)


def inversion_types(pair: AlignedPair) -> InversionDecomposition:
    """Count inversions ``[i;j]`` (``i < j``, ``pi(i) > pi(j)``) by positional type.

    Type I: ``pi(i) >= j``. Type II: ``pi(j) <= i``.
    """
    p = np.asarray(pair.pi_ranks, dtype=np.int64)
    idx = np.arange(1, pair.n + 1)
    inv = np.triu(p[:, None] > p[None, :], k=1)
    t1 = inv & (p[:, None] >= idx[None, :])
    t2 = inv & (p[None, :] <= idx[:, None])
    return InversionDecomposition(
        total_inversions=int(inv.sum()),
        type1=int(t1.sum()),
        type2=int(t2.sum()),
        both=int((t1 & t2).sum()),
        neither=int((inv & ~t1 & ~t2).sum()),
    )


def type1_counts(pair: AlignedPair) -> list[int]:
    """Per reference rank ``i``, the number of Type I inversions ``[i;k]``."""
    p = pair.pi_ranks
    n = pair.n
    return [sum(1 for k in range(i + 1, n + 1) if p[i - 1] > p[k - 1] and p[i - 1] >= k)
            for i in range(1, n + 1)]


def dg_report(pair: AlignedPair, w: WeightTable | None = None) -> DGReport:
    s = footrule_weighted(pair, w)
    k2 = twice_kendall(pair, w)
    k = k2 / 2
    tol = dg_tolerance(s)
    return DGReport(k, s, k2, k <= s + tol, s <= k2 + tol, s / k if k else None)
