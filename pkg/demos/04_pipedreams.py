"""
Staircase and chevron pipe dreams
=================================

"""

# A triangulation of the m-gon becomes a pipe dream in the staircase
# polyomino: bump tiles at the boxes of its edges, crossing tiles
# elsewhere.  Pipes enter on the left, leave on top, and realize a fixed
# permutation; no pair of pipes crosses twice.
from multitri import (
    cylinder, enumerate_cylinder, phi, render_ascii,
    staircase_from_triangulation, trace_pipes)

t = enumerate_cylinder(cylinder(3, 2))[0]
staircase = staircase_from_triangulation(phi(t).inner)
print(render_ascii(staircase))

trace = trace_pipes(staircase)
print(f"permutation {trace.permutation}, "
      f"{len(trace.paths)} pipes, "
      f"reduced: {all(len(c) == 1 for c in trace.crossings.values())}")

# Cutting the staircase below the spanning row, rotating the remainder a
# half turn, and reattaching the freed triangle produces the chevron
# shape.  The intermediate stages are inspectable.
from multitri import chevron_from_staircase, chevron_stages, grid_lines

stages = chevron_stages(staircase)
for name in ("pyramid", "triangle", "chevron"):
    print(f"--- {name}")
    print("\n".join(grid_lines(stages[name])))

# On the chevron, n-periodicity of the source triangulation becomes a
# visible tiling symmetry.
from multitri import is_n_periodic

chevron = chevron_from_staircase(staircase)
print("chevron periodic:", is_n_periodic(chevron, 3))
