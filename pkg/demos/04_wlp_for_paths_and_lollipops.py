"""Deciding the weak Lefschetz property.

An Artinian algebra has the WLP when multiplication by some linear form has
maximal rank between every pair of consecutive degrees; for monomial ideals
it is enough to test the all-ones form.  Path algebras have the WLP exactly
for n in {1..7, 9, 10, 13}; lollipop algebras for the parameter sets shown
by the classification sweep below.

Run:  python demos/04_wlp_for_paths_and_lollipops.py
"""

from wlpgraph import (
    classify_lollipop,
    expected_lollipop_wlp,
    failure_localization,
    from_graph,
    lollipop,
    mode_of_path,
    path,
    wlp_report,
)

# Full per-degree report for a path that has the WLP:
report = wlp_report(from_graph(path(13)))
print("A(P_13):", report.hilbert)
for v in report.verdicts:
    print(f"  degree {v.degree}: {v.h_source} -> {v.h_target}, rank {v.rank}, "
          f"{'injective' if v.injective else ''}{'/' if v.injective and v.surjective else ''}"
          f"{'surjective' if v.surjective else ''}")
print("WLP:", report.has_wlp)
print()

# P_8 fails exactly one thing: surjectivity out of its mode degree.
report8 = wlp_report(from_graph(path(8)))
print("A(P_8) failing degrees:", report8.failing_degrees)
tags = failure_localization(report8, mode_of_path(8))
for t in tags:
    print("  ", t.label, f"(degree {t.degree})")
print()

# Lollipops: computed verdict against the classification, a small sweep.
print("classification sweep, m = 1..5, n = 1..10 (x = WLP, . = no WLP):")
print("      n:", " ".join(f"{n:>2}" for n in range(1, 11)))
for m in range(1, 6):
    row = []
    for n in range(1, 11):
        c = classify_lollipop(m, n)  # raises if computation and theory disagree
        row.append(" x" if c.report.has_wlp else " .")
    print(f"  m = {m}:", "".join(row))
print()

# The failure degree of L_{4,9} sits at the mode of its Hilbert series:
c49 = classify_lollipop(4, 9)
print("L_{4,9} expected WLP:", expected_lollipop_wlp(4, 9),
      "| computed:", c49.report.has_wlp,
      "| failing:", c49.report.failing_degrees)
