"""
How far the weighted footrule and Kendall tau can drift apart
=============================================================

Unweighted, Kendall's tau K and the footrule S always satisfy K <= S <= 2K.
With element weights the upper half survives: an element involved in m
inversions is displaced by at most m places. The lower half does not. An
element can stay in place while taking part in inversions, and if it is heavy
the weighted tau outgrows the weighted footrule.
"""

import numpy as np

from weightedrank import AlignedPair, WeightTable
from weightedrank.analysis import dg_report
from weightedrank.measures import report_for_pair

# the middle of a reversed triple never moves
pair = AlignedPair.from_ranks([3, 2, 1])
for middle in (1, 2, 10, 1000):
    w = WeightTable({"1": 1, "2": middle, "3": 1})
    rep = dg_report(pair, w)
    print(f"w(middle)={middle:5d}  K_w={rep.kendall_raw:7.1f}  S_w={rep.footrule_raw:3d}  "
          f"lower holds={rep.holds_lower}  upper holds={rep.holds_upper}")

# a random sweep: the upper bound never fails, the lower one does for small lists
rng = np.random.default_rng(0)
fails = {"lower": 0, "upper": 0}
for _ in range(20000):
    n = int(rng.integers(2, 9))
    pair = AlignedPair.from_ranks(rng.permutation(n) + 1)
    w = WeightTable({str(i): float(x) for i, x in enumerate(rng.uniform(0.01, 1000, n), 1)})
    rep = dg_report(pair, w)
    fails["lower"] += not rep.holds_lower
    fails["upper"] += not rep.holds_upper
print("violations over 20000 random weighted cases:", fails)

# the footrule is normalized by the reversal, which is not its maximum under weights
r = report_for_pair(AlignedPair.from_ranks([2, 3, 1]), WeightTable({"1": 1, "2": 100, "3": 1}))
print("normalized footrule:", r.footrule_norm, "overflow flagged:", r.footrule_overflow)
