"""
Comparing two ranked lists
==========================

Two search result pages rarely hold the same documents. Each page is
completed with the documents it is missing, appended in the order the other
page shows them, and the two completed lists are then scored.
"""

from weightedrank import RankedList, WeightTable, compare, complete_pair, align

# a short page against a longer one that drops "a" and adds "d" and "e"
ours = RankedList(["a", "b", "c"])
theirs = RankedList(["b", "d", "c", "e"])

ours_full, theirs_full = complete_pair(ours, theirs)
print("completed:", ours_full.elements, theirs_full.elements)

# relabel by our ranks: entry i is where our i-th document landed on their page
pair = align(ours_full, theirs_full)
print("their ranks of our documents:", pair.pi_ranks)

report = compare(ours, theirs)
print(f"footrule {report.footrule_raw} / {report.footrule_denom} = {report.footrule_norm:.3f}")
print(f"kendall  {report.kendall_raw} / {report.kendall_denom} = {report.kendall_norm:.3f}")
print("K <= S <= 2K:", report.dg_holds)

# identical and fully reversed pages sit at the two ends of the scale
for other in (["a", "b", "c", "d", "e"], ["e", "d", "c", "b", "a"]):
    r = compare(RankedList("abcde"), RankedList(other))
    print(other, (r.footrule_norm, r.kendall_norm))

# weighting the top document makes moving it cost more
heavy_top = WeightTable({"a": 5.0})
r = compare(ours, theirs, heavy_top)
print("with w(a)=5:", r.footrule_raw, r.kendall_raw)
