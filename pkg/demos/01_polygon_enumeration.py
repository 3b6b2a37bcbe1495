"""
Enumerating k-triangulations of a convex polygon
================================================

"""

# A k-triangulation is a maximal set of edges of the convex n-gon with no
# k+1 of them pairwise crossing.  Enumeration works over the candidate
# edges longer than k; shorter edges can never participate in a
# (k+1)-crossing, so every triangulation contains all of them.
from multitri import enumerate_polygon, expected_edge_count, polygon

for n, k in [(6, 1), (8, 2), (9, 3)]:
    found = enumerate_polygon(polygon(n, k))
    print(f"{k}-triangulations of the {n}-gon: {len(found)}")

# Every k-triangulation of the n-gon has the same number of edges.
surface = polygon(8, 2)
found = enumerate_polygon(surface)
sizes = {len(t.edges) for t in found}
print(f"edge counts at n=8, k=2: {sizes}, formula k(2n-2k-1) = "
      f"{expected_edge_count(8, 2)}")

# The triangle analogue for k > 1 is the k-star: 2k+1 vertices joined by
# the 2k+1 edges that skip k positions.  Each triangulation decomposes
# into exactly n - 2k of them.
from multitri import star_decomposition

t = found[0]
stars = star_decomposition(t)
print(f"one triangulation: {[(e.a, e.b) for e in t.relevant_edges()]}")
print(f"decomposes into {len(stars)} stars:")
for star in stars:
    print(f"  visiting order {star.vertices}")
