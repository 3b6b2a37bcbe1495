"""
Triangulating the half-cylinder
===============================

"""

# The half-cylinder C_n has n marked points on one boundary circle.  Its
# edges are orbits of cover edges under translation by n: an EdgeClass
# stores the representative starting in [0, n).  Only classes of length
# at most kn exist, and exactly the ones longer than k are flippable.
from multitri import (
    cylinder, enumerate_cylinder, relevant_class_candidates, short_classes)

n, k = 3, 2
print(f"C_{n} at k={k}:")
print(f"  short classes: {[(c.rep.a, c.rep.b) for c in short_classes(n, k)]}")
print(f"  relevant candidates: "
      f"{[(c.rep.a, c.rep.b) for c in relevant_class_candidates(n, k)]}")

found = enumerate_cylinder(cylinder(n, k))
print(f"  2-triangulations: {len(found)}")

# Every triangulation of C_n contains exactly one spanning class (length
# kn, winding once around the cylinder) and decomposes around its stars.
from multitri import count_report, unique_spanning_class

for t in found[:4]:
    spanning = unique_spanning_class(t)
    stars, relevant, total = count_report(t)
    print(f"  spanning {spanning.rep.a},{spanning.rep.b}: "
          f"{stars} stars, {relevant} relevant, {total} total classes")

# The counts (n-1, 2(n-1), 2(2n-1)) are the same for every triangulation.
counts = {tuple(count_report(t)) for t in found}
print(f"  distinct count triples across all {len(found)}: {counts}")
