"""Exhaustive distributions of unweighted footrule and Kendall over all n! permutations.

Every permutation is scored against the identity. Work is split into blocks
sharing a leading prefix; each block yields a joint ``(S, K)`` count matrix,
and the frequency tables for the ratio ``S/K`` and the normalized measures
are all derived from the merged matrix with exact rational keys.
"""
from __future__ import annotations

import csv
import io
import itertools
import json
import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping

import numpy as np

MAX_N = 12
BLOCK_TAIL = 9  # rows per block are at most 9! = 362880

__all__ = [
    "FrequencyTable",
    "DistStats",
    "enumerate_permutations",
    "joint_counts",
    "ratio_distribution",
    "normalized_distribution",
    "compute_stats",
    "footrule_max",
]


@dataclass
class FrequencyTable:
    """Exact value -> count multiset."""

    entries: Counter = field(default_factory=Counter)

    @property
    def total(self) -> int:
        return sum(self.entries.values())

    def add(self, value, count: int = 1) -> None:
        self.entries[Fraction(value)] += count

    def merge(self, other: "FrequencyTable") -> "FrequencyTable":
        return FrequencyTable(self.entries + other.entries)

    def items(self) -> list[tuple[Fraction, int]]:
        return sorted(self.entries.items())

    def __eq__(self, other):
        return isinstance(other, FrequencyTable) and dict(self.entries) == dict(other.entries)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["value", "count"])
        for value, count in self.items():
            writer.writerow([fmt(value), count])
        return buf.getvalue()

    def to_json(self) -> list[dict]:
        return [{"num": v.numerator, "den": v.denominator, "count": c} for v, c in self.items()]

    @classmethod
    def from_json(cls, rows: Iterable[Mapping]) -> "FrequencyTable":
        return cls(Counter({Fraction(r["num"], r["den"]): int(r["count"]) for r in rows}))


@dataclass(frozen=True)
class DistStats:
    mean: float
    median: float
    mode: float
    std_dev: float
    skewness: float
    total: int

    def to_dict(self) -> dict:
        return {k: (fmt(v) if isinstance(v, float) else v) for k, v in self.__dict__.items()}


def fmt(x, digits: int = 12):
    """Round to ``digits`` significant digits; JSON/CSV friendly."""
    return float(f"{float(x):.{digits}g}")


def _check_n(n: int, lo: int = 1) -> None:
    if not isinstance(n, int) or not lo <= n <= MAX_N:
        raise ValueError(f"n must be an integer in [{lo}, {MAX_N}], got {n!r}")


def enumerate_permutations(n: int, prefix: tuple[int, ...] = ()) -> Iterator[tuple[int, ...]]:
    """All permutations of ``1..n`` starting with ``prefix``, lexicographically."""
    _check_n(n)
    rest = [v for v in range(1, n + 1) if v not in prefix]
    for tail in itertools.permutations(rest):
        yield tuple(prefix) + tail


@lru_cache(maxsize=4)
def _all_perms(k: int) -> np.ndarray:
    """All permutations of ``0..k-1`` as int8 rows in lexicographic order."""
    perms = np.zeros((1, 0), dtype=np.int8)
    for m in range(1, k + 1):
        # prepend each possible first value, relabelling the (m-1)-perms onto the rest
        blocks = []
        for first in range(m):
            rest = np.array([v for v in range(m) if v != first], dtype=np.int8)
            blocks.append(np.hstack([np.full((len(perms), 1), first, dtype=np.int8), rest[perms]]))
        perms = np.vstack(blocks)
    return perms


def prefixes(n: int) -> list[tuple[int, ...]]:
    """0-based leading prefixes that partition the permutations of ``n`` into blocks."""
    depth = max(1, n - BLOCK_TAIL)
    return list(itertools.permutations(range(n), depth))


def footrule_max(n: int) -> int:
    return 2 * (n * n // 4)


def block_counts(n: int, prefix: tuple[int, ...]) -> np.ndarray:
    """Joint ``(S, K)`` counts over the permutations starting with ``prefix``."""
    tail = n - len(prefix)
    rest = np.array([v for v in range(n) if v not in prefix], dtype=np.int8)
    rows = np.hstack([np.tile(np.array(prefix, dtype=np.int8), (math.factorial(tail), 1)),
                      rest[_all_perms(tail)]])
    s = np.abs(rows.astype(np.int16) - np.arange(n, dtype=np.int16)).sum(axis=1, dtype=np.int64)
    k = np.zeros(len(rows), dtype=np.int64)
    for i in range(n):
        for j in range(i + 1, n):
            k += rows[:, i] > rows[:, j]
    kmax = n * (n - 1) // 2
    out = np.bincount(s * (kmax + 1) + k, minlength=(footrule_max(n) + 1) * (kmax + 1))
    return out.reshape(footrule_max(n) + 1, kmax + 1)


def _block_job(args):
    return block_counts(*args)


def joint_counts(n: int, jobs: int = 1) -> np.ndarray:
    """``counts[S, K]`` = number of permutations of ``n`` with footrule S and Kendall K."""
    _check_n(n)
    tasks = [(n, p) for p in prefixes(n)]
    if jobs <= 1 or len(tasks) == 1:
        parts = map(_block_job, tasks)
        return sum(parts)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return sum(pool.map(_block_job, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))


def ratio_table(counts: np.ndarray) -> FrequencyTable:
    table = FrequencyTable()
    for s, k in zip(*np.nonzero(counts)):
        if k:
            table.add(Fraction(int(s), int(k)), int(counts[s, k]))
    return table


def ratio_distribution(n: int, jobs: int = 1) -> tuple[FrequencyTable, DistStats]:
    """Distribution of ``S/K`` over every non-identity permutation of ``n``.

    The identity has ``S = K = 0`` and is left out, so ``total == n! - 1``.
    """
    _check_n(n, 2)
    table = ratio_table(joint_counts(n, jobs))
    return table, compute_stats(table)


def normalized_table(counts: np.ndarray, measure: str) -> FrequencyTable:
    n_s, n_k = counts.shape
    if measure == "footrule":
        marginal, denom = counts.sum(axis=1), n_s - 1
    elif measure == "kendall":
        marginal, denom = counts.sum(axis=0), n_k - 1
    else:
        raise ValueError(f"unknown measure {measure!r}")
    table = FrequencyTable()
    for v in np.nonzero(marginal)[0]:
        table.add(Fraction(int(v), denom), int(marginal[v]))
    return table


def normalized_distribution(n: int, measure: str, jobs: int = 1) -> tuple[FrequencyTable, DistStats]:
    """Distribution of the normalized footrule or Kendall over all permutations of ``n``."""
    _check_n(n, 2)
    table = normalized_table(joint_counts(n, jobs), measure)
    return table, compute_stats(table)


def compute_stats(table: FrequencyTable) -> DistStats:
    """Population moments, median and mode of an exact frequency table.

    Median averages the two middle values when the total is even; mode is the
    smallest of the most frequent values. Moments are accumulated exactly.
    """
    items = table.items()
    total = sum(c for _, c in items)
    if total == 0:
        raise ValueError("empty frequency table")
    mean = sum(v * c for v, c in items) / total
    m2 = sum((v - mean) ** 2 * c for v, c in items) / total
    m3 = sum((v - mean) ** 3 * c for v, c in items) / total

    def nth(idx):
        seen = 0
        for v, c in items:
            seen += c
            if seen > idx:
                return v
        raise AssertionError("unreachable")

    median = (nth((total - 1) // 2) + nth(total // 2)) / 2
    top = max(c for _, c in items)
    mode = min(v for v, c in items if c == top)
    skew = float(m3) / float(m2) ** 1.5 if m2 else 0.0
    return DistStats(float(mean), float(median), float(mode), math.sqrt(m2), skew, total)


def stats_json(kind: str, n: int, table: FrequencyTable, stats: DistStats) -> str:
    meta = {"kind": kind, "n": n, "total": table.total, "distinct_values": len(table.entries)}
    if kind == "ratio":
        meta["identity_excluded"] = True
    meta.update(stats.to_dict())
    return json.dumps(meta, indent=2)
