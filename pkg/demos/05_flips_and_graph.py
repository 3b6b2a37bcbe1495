"""
Orbit flips and the flip graph
==============================

"""

# Removing a relevant class from a cylinder triangulation leaves exactly
# one other class that restores maximality; swapping them is the orbit
# flip, and it is an involution.
from multitri import cylinder, enumerate_cylinder, orbit_flip

t = enumerate_cylinder(cylinder(3, 2))[0]
e = t.relevant_classes()[0]
flipped, f = orbit_flip(t, e)
print(f"flip {e.rep.a},{e.rep.b} -> {f.rep.a},{f.rep.b}")
back, _ = orbit_flip(flipped, f)
print("involution:", back.class_set() == t.class_set())

# Flipping every relevant class of every triangulation builds the flip
# graph: one vertex per triangulation, one edge per unordered flip.
from multitri import build_flip_graph

graph = build_flip_graph(3)
print(f"n=3: {len(graph.vertices)} vertices, degrees {set(graph.degrees)}, "
      f"{graph.component_count} component")

# The graph exports to DOT for rendering and to JSON for processing.
from multitri import flip_graph_dot, flip_graph_json

print(flip_graph_dot(build_flip_graph(2)))
print(flip_graph_json(build_flip_graph(2))["edges"])
