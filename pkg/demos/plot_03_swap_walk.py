"""
Walking from the identity with adjacent swaps
=============================================

Kendall's tau counts the adjacent swaps bubble sort needs. Replaying those
swaps from the identity and tracking how each one changes the weighted
footrule shows why S_w <= 2 K_w: no swap can add more than the two swapped
weights, and every swap adds half of that sum to K_w.
"""

from weightedrank import AlignedPair, WeightTable
from weightedrank.analysis import inversion_types, minimal_swap_sequence, telescoping_check

pair = AlignedPair.from_ranks([5, 1, 3, 2, 4])
w = WeightTable({"1": 3, "2": 1, "3": 2, "4": 1, "5": 4})

steps = minimal_swap_sequence(pair, w)
for s in steps:
    print(f"swap {s.index}<->{s.index + 1} in {s.before}: delta={s.delta:+} ({s.case_label.value}), "
          f"bound {s.w_left + s.w_right}")

check = telescoping_check(steps, pair, w)
print("sum of deltas", check.total, "== S_w", check.footrule, "->", check.ok)

# the lower-bound argument sorts inversions by where the larger rank lands
print(inversion_types(pair))
