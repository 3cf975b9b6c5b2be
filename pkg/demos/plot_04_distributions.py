"""
Distributions over every permutation of ten items
=================================================

Scoring all 10! = 3,628,800 orderings against the identity gives the exact
distribution of S/K and of both normalized measures. Values are kept as exact
fractions, so mode and counts are unambiguous.
"""

import sys

from weightedrank.experiments import compute_stats, joint_counts, normalized_table, ratio_table

n = int(sys.argv[1]) if len(sys.argv) > 1 else 10

# one pass gives the joint (S, K) histogram; everything else is derived from it
counts = joint_counts(n, jobs=4)

for name, table in [("S/K (identity left out)", ratio_table(counts)),
                    ("normalized footrule", normalized_table(counts, "footrule")),
                    ("normalized kendall", normalized_table(counts, "kendall"))]:
    st = compute_stats(table)
    print(f"{name:26s} N={st.total:8d} mean={st.mean:.4f} median={st.median:.4f} "
          f"mode={st.mode:.4f} std={st.std_dev:.4f} skew={st.skewness:+.4f}")

# a coarse text histogram of the ratio
table = ratio_table(counts)
bins = [0] * 10
for v, c in table.items():
    bins[min(int((v - 1) * 10), 9)] += c
peak = max(bins)
for i, c in enumerate(bins):
    print(f"[{1 + i / 10:.1f}, {1 + (i + 1) / 10:.1f}) {'#' * round(50 * c / peak)}")
