"""
Cylinder triangulations as periodic polygon triangulations
==========================================================

"""

# Unrolling the cylinder k times turns each edge class into an orbit of
# polygon edges on 2kn vertices.  The map phi sends a triangulation of
# C_n to a triangulation of the 2kn-gon invariant under shifting by n.
from multitri import (
    cylinder, enumerate_cylinder, phi, phi_inverse, is_shift_invariant)

n, k = 3, 2
t = enumerate_cylinder(cylinder(n, k))[0]
print("cylinder classes:", [(c.rep.a, c.rep.b) for c in t.relevant_classes()])

periodic = phi(t)
print(f"polygon image on {periodic.inner.surface.n} vertices, "
      f"shift-invariant: {is_shift_invariant(periodic.inner, n)}")
print("long polygon edges:", [(e.a, e.b) for e in periodic.inner.relevant_edges()])

# phi_inverse reads the classes back off the polygon picture.
back = phi_inverse(periodic)
print("round trip intact:", back.class_set() == t.class_set())

# Counting both sides independently confirms the bijection at small n.
from multitri import enumerate_shift_invariant, polygon

cyl = enumerate_cylinder(cylinder(n, k))
invariant = enumerate_shift_invariant(polygon(2 * k * n, k), n)
images = {phi(s).inner.edge_set() for s in cyl}
print(f"|C_{n}| = {len(cyl)}, shift-invariant {2 * k * n}-gon = {len(invariant)}, "
      f"images cover: {images == {s.edge_set() for s in invariant}}")
