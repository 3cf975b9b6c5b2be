"""Exit criteria. Each test records one PASS/FAIL line per check; the lines are
printed in the pytest terminal summary (see conftest.py).

Run alone with ``pytest tests/test_acceptance.py``.
"""
import itertools
import math
import time

import numpy as np
import pytest

from weightedrank.analysis import minimal_swap_sequence, telescoping_check
from weightedrank.core import AlignedPair, RankedList, WeightTable, align
from weightedrank.experiments import joint_counts, normalized_table, ratio_table, compute_stats
from weightedrank.measures import (compare, dg_tolerance, footrule_normalized, footrule_weighted,
                                   kendall_normalized, report_for_pair, twice_kendall)

import oracles

pytestmark = pytest.mark.acceptance

RESULTS = []


class Criterion:
    def __init__(self, number, title):
        self.number, self.title = number, title
        self.checks = []
        self.start = time.perf_counter()

    def check(self, label, ok, detail=""):
        self.checks.append((label, bool(ok), detail))

    def finish(self, budget_s=None):
        elapsed = time.perf_counter() - self.start
        if budget_s is not None:
            self.check(f"runtime < {budget_s:g}s", elapsed < budget_s, f"{elapsed:.1f}s")
        for label, ok, detail in self.checks:
            RESULTS.append(f"[{'PASS' if ok else 'FAIL'}] criterion {self.number} ({self.title}): "
                           f"{label}" + (f" -- {detail}" if detail else ""))
        failed = [label for label, ok, _ in self.checks if not ok]
        assert not failed, f"criterion {self.number} failed: {failed}"


def by_rank(weights):
    return WeightTable({str(i): float(wt) for i, wt in enumerate(weights, 1)})


def weights_0_1000(rng, n):
    # uniform on (0, 1000]
    return 1000.0 - rng.uniform(0.0, 1000.0, n)


def test_c1_worked_examples():
    c = Criterion(1, "worked examples exact")
    cases = {
        "example 1": (("abcde", "abcde"), (0, 0, 0, 0)),
        "example 2": (("abcde", "edcba"), (12, 10, 1, 1)),
        "example 3": (("abc", "bdce"), (8, 5, 2 / 3, 1 / 2)),
    }
    for name, ((a, b), expected) in cases.items():
        r = compare(RankedList(a), RankedList(b))
        got = (r.footrule_raw, r.kendall_raw, r.footrule_norm, r.kendall_norm)
        c.check(f"{name} (S, K, s, k) == {expected}", got == expected, f"got {got}")
    c.finish()


def test_c2_weighted_diaconis_graham_sweep():
    c = Criterion(2, "weighted DG sweep")
    rng = np.random.default_rng(20240502)
    lower_bad = upper_bad = 0
    first_lower = None
    for _ in range(100_000):
        n = int(rng.integers(2, 129))
        pair = AlignedPair.from_ranks(rng.permutation(n) + 1)
        wts = weights_0_1000(rng, n)
        w = by_rank(wts)
        s, k2 = footrule_weighted(pair, w), twice_kendall(pair, w)
        tol = dg_tolerance(s)
        if k2 / 2 > s + tol:
            lower_bad += 1
            if first_lower is None or n < len(first_lower[0]):
                first_lower = (pair.pi_ranks, np.round(wts, 3).tolist(), s, k2 / 2)
        if s > k2 + tol:
            upper_bad += 1
    c.check("random: S_w <= 2 K_w on 100000 cases", upper_bad == 0, f"{upper_bad} violations")
    c.check("random: K_w <= S_w on 100000 cases", lower_bad == 0,
            f"{lower_bad} violations; smallest {first_lower}")

    ex_lower = ex_upper = total = 0
    for n in range(1, 7):
        for p in itertools.permutations(range(1, n + 1)):
            pair = AlignedPair.from_ranks(p)
            for _ in range(20):
                w = by_rank(weights_0_1000(rng, n))
                s, k2 = footrule_weighted(pair, w), twice_kendall(pair, w)
                tol = dg_tolerance(s)
                ex_lower += k2 / 2 > s + tol
                ex_upper += s > k2 + tol
                total += 1
    c.check(f"exhaustive n<=6 x 20 weight tables: S_w <= 2 K_w ({total} cases)", ex_upper == 0,
            f"{ex_upper} violations")
    c.check(f"exhaustive n<=6 x 20 weight tables: K_w <= S_w ({total} cases)", ex_lower == 0,
            f"{ex_lower} violations")
    c.finish(120)


def test_c3_partial_lists():
    c = Criterion(3, "partial-list DG")
    rng = np.random.default_rng(7)
    lower_bad = upper_bad = 0
    example = None
    for case in range(10_000):
        la, lb = rng.integers(0, 65, 2)
        if la == lb == 0:
            lb = 1
        shared = int(round(rng.uniform() * min(la, lb)))
        common = [f"c{case}_{i}" for i in range(shared)]
        a = common + [f"a{i}" for i in range(la - shared)]
        b = common + [f"b{i}" for i in range(lb - shared)]
        rng.shuffle(a)
        rng.shuffle(b)
        toks = set(a) | set(b)
        w = WeightTable({t: float(x) for t, x in zip(sorted(toks), weights_0_1000(rng, len(toks)))})
        r = compare(RankedList(a), RankedList(b), w)
        upper_bad += not r.dg_upper
        if not r.dg_lower:
            lower_bad += 1
            example = example or (len(a), len(b), shared, r.kendall_raw, r.footrule_raw)
    c.check("S_w <= 2 K_w after completion (10000 pairs)", upper_bad == 0, f"{upper_bad} violations")
    c.check("K_w <= S_w after completion (10000 pairs)", lower_bad == 0,
            f"{lower_bad} violations; e.g. (|a|, |b|, shared, K_w, S_w) = {example}")
    c.finish(30)


def _n_for_equivalence(rng):
    # log-uniform on [2, 4096]; the quadratic reference dominates the runtime
    return int(round(2 ** rng.uniform(1, 12)))


def test_c4_fast_naive_equivalence():
    c = Criterion(4, "fast/naive Kendall")
    rng = np.random.default_rng(4096)
    mism, worst, nmax = 0, 0.0, 0
    for _ in range(10_000):
        n = _n_for_equivalence(rng)
        nmax = max(nmax, n)
        pair = AlignedPair.from_ranks(rng.permutation(n) + 1)
        w = WeightTable({str(i): int(x) for i, x in enumerate(rng.integers(1, 1001, n), 1)})
        mism += twice_kendall(pair, w, "fast") != twice_kendall(pair, w, "naive")
    c.check("integer weights: exact equality on 10000 cases", mism == 0, f"{mism} mismatches, max n {nmax}")
    for _ in range(10_000):
        n = _n_for_equivalence(rng)
        pair = AlignedPair.from_ranks(rng.permutation(n) + 1)
        w = by_rank(weights_0_1000(rng, n))
        f, v = twice_kendall(pair, w, "fast"), twice_kendall(pair, w, "naive")
        if v:
            worst = max(worst, abs(f - v) / abs(v))
    c.check("real weights: relative difference <= 1e-9 on 10000 cases", worst <= 1e-9, f"worst {worst:.2e}")
    c.finish(60)


@pytest.fixture(scope="module")
def counts10():
    start = time.perf_counter()
    counts = joint_counts(10)
    return counts, time.perf_counter() - start


def test_c5_ratio_distribution(counts10):
    c = Criterion(5, "ratio distribution n=10")
    counts, elapsed = counts10
    table = ratio_table(counts)
    st = compute_stats(table)
    c.check("identity excluded (N = 10! - 1)", st.total == math.factorial(10) - 1, f"N={st.total}")
    c.check("mean within 0.02 of 1.50", abs(st.mean - 1.50) <= 0.02, f"{st.mean:.4f}")
    c.check("median within 0.02 of 1.50", abs(st.median - 1.50) <= 0.02, f"{st.median:.4f}")
    c.check("mode within 0.02 of 1.50", abs(st.mode - 1.50) <= 0.02, f"{st.mode:.4f}")
    c.check("std within 0.005 of 0.14", abs(st.std_dev - 0.14) <= 0.005, f"{st.std_dev:.4f}")
    c.check("skewness within 0.01 of 0.42", abs(st.skewness - 0.42) <= 0.01, f"{st.skewness:.4f}")
    c.check("enumeration < 300s single-threaded", elapsed < 300, f"{elapsed:.1f}s")
    c.finish()


def test_c6_normalized_distributions(counts10):
    c = Criterion(6, "normalized distributions n=10")
    counts, elapsed = counts10
    k = compute_stats(normalized_table(counts, "kendall"))
    s = compute_stats(normalized_table(counts, "footrule"))
    c.check("kendall mean == 0.50 exactly", k.mean == 0.5, f"{k.mean!r}")
    c.check("kendall std within 0.005 of 0.13", abs(k.std_dev - 0.13) <= 0.005, f"{k.std_dev:.4f}")
    c.check("footrule mean within 0.005 of 0.66", abs(s.mean - 0.66) <= 0.005, f"{s.mean:.4f}")
    c.check("footrule median within 0.005 of 0.66", abs(s.median - 0.66) <= 0.005, f"{s.median:.4f}")
    c.check("footrule mode within 0.005 of 0.68", abs(s.mode - 0.68) <= 0.005, f"{s.mode:.4f}")
    c.check("footrule std within 0.005 of 0.14", abs(s.std_dev - 0.14) <= 0.005, f"{s.std_dev:.4f}")
    c.check("footrule skewness within 0.01 of -0.18", abs(s.skewness + 0.18) <= 0.01, f"{s.skewness:.4f}")
    c.check("enumeration < 300s single-threaded", elapsed < 300, f"{elapsed:.1f}s")
    c.finish()


def test_c7_proof_machinery():
    c = Criterion(7, "swap-sequence diagnostics")
    rng = np.random.default_rng(32)
    tele_bad = case_bad = 0
    for _ in range(1000):
        n = int(rng.integers(1, 33))
        pair = AlignedPair.from_ranks(rng.permutation(n) + 1)
        w = by_rank(weights_0_1000(rng, n))
        steps = minimal_swap_sequence(pair, w)
        rep = telescoping_check(steps, pair, w)
        tele_bad += abs(rep.total - footrule_weighted(pair, w)) > dg_tolerance(rep.footrule)
        case_bad += sum(abs(s.delta - s.case_delta()) > 1e-9 * max(1.0, abs(s.delta)) for s in steps)
    c.check("sum of deltas == S_w on 1000 weighted instances", tele_bad == 0, f"{tele_bad} mismatches")
    c.check("every delta matches its case formula", case_bad == 0, f"{case_bad} mismatches")
    len_bad = 0
    for n in range(1, 7):
        for p in itertools.permutations(range(1, n + 1)):
            steps = minimal_swap_sequence(AlignedPair.from_ranks(p))
            len_bad += len(steps) != oracles.ranks_twice_kendall(list(p)) // 2
    c.check("sequence length == inversion count, all perms n<=6", len_bad == 0, f"{len_bad} mismatches")
    c.finish()


def test_c8_metric_axioms():
    c = Criterion(8, "metric axioms, unit weights")
    for n in range(1, 6):
        perms = [tuple(p) for p in itertools.permutations("abcde"[:n])]
        m = len(perms)
        S = np.zeros((m, m))
        K = np.zeros((m, m))
        for x, px in enumerate(perms):
            for y, py in enumerate(perms):
                pair = align(RankedList(px), RankedList(py))
                S[x, y] = footrule_weighted(pair)
                K[x, y] = twice_kendall(pair) / 2
        for name, D in (("S", S), ("K", K)):
            c.check(f"n={n} {name} symmetric", (D == D.T).all())
            c.check(f"n={n} {name} zero iff equal",
                    ((D == 0) == np.eye(m, dtype=bool)).all() and (D >= 0).all())
            tri = D[:, None, :] <= D[:, :, None] + D[None, :, :]   # d(x,z) <= d(x,y) + d(y,z)
            c.check(f"n={n} {name} triangle inequality over {m ** 3} triples", tri.all())
    bad = 0
    for n in range(1, 7):
        toks = "abcdef"[:n]
        ident = list(toks)
        for p in itertools.permutations(range(1, n + 1)):
            inv = [0] * n
            for i, r in enumerate(p, 1):
                inv[r - 1] = i
            d1 = report_for_pair(align(RankedList(ident), RankedList(oracles.as_list(p, toks))))
            d2 = report_for_pair(align(RankedList(ident), RankedList(oracles.as_list(inv, toks))))
            bad += (d1.footrule_raw, d1.kendall_raw) != (d2.footrule_raw, d2.kendall_raw)
    c.check("d(id, s) == d(id, s^-1) for S and K, all perms n<=6", bad == 0, f"{bad} mismatches")
    c.finish()


def test_c9_normalization_overflow():
    c = Criterion(9, "footrule normalization overflow")
    pair = AlignedPair.from_ranks([2, 3, 1])
    w = by_rank([1, 100, 1])
    r = report_for_pair(pair, w)
    c.check("footrule_norm == 25.75", r.footrule_norm == 25.75 == footrule_normalized(pair, w),
            f"{r.footrule_norm}")
    c.check("overflow flag set", r.footrule_overflow)
    c.check("kendall_norm stays <= 1", kendall_normalized(pair, w) <= 1)
    values = {p: oracles.ranks_footrule(p, [1, 100, 1]) for p in oracles.all_perms(3)}
    c.check("brute force: reversal S_w == 4 is not the maximum (103)",
            values[(3, 2, 1)] == 4 and max(values.values()) == 103, f"{values}")
    c.finish()
