"""Orbit flips of periodic 2-triangulations and the flip graph.

Removing a relevant class from a maximal periodic family leaves room for
exactly one other class, found here by two independent routes that must
agree: the common bisector of the two stars holding a representative in
the periodic polygon picture, and the unique crossing of the two pipes
that bump at a representative tile of the chevron.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .bijection import class_of_polygon_edge, orbit_of_class, phi
from .cylinder import (
    ENUMERATION_BUDGET,
    CylinderTriangulation,
    enumerate_cylinder,
    stars_of,
)
from .errors import (
    LengthPrecondition,
    NotInTriangulation,
    NotRelevant,
    StructureViolation,
    TooLarge,
)
from .pipedreams import (
    cell_edge,
    chevron_from_staircase,
    staircase_from_triangulation,
    trace_pipes,
)
from .polygon import polygon_flip
from .surfaces import Edge, EdgeClass, cylinder, edge_class_of

FLIP_GRAPH_BUDGET = 5


def _flip_via_stars(t: CylinderTriangulation, e: EdgeClass) -> EdgeClass:
    """Flip through the periodic polygon: bisector of the two holder stars."""
    n, k = t.surface.n, t.surface.k
    p = phi(t)
    rep = Edge(e.rep.a, e.rep.b)
    _, f = polygon_flip(p.inner, rep)
    return class_of_polygon_edge(f, n, k)


def _flip_via_chevron(t: CylinderTriangulation, e: EdgeClass) -> EdgeClass:
    """Flip through the chevron: the pipes bumping at a representative cross once."""
    n, k = t.surface.n, t.surface.k
    m = 2 * k * n
    p = phi(t)
    dream = chevron_from_staircase(staircase_from_triangulation(p.inner))
    orbit = set(orbit_of_class(e, k))
    cells = sorted(rc for rc in dream.tiles if cell_edge(*rc, m) in orbit)
    if not cells:
        raise StructureViolation(f"no chevron tile carries a representative of {e}")
    r, c = cells[0]
    trace = trace_pipes(dream)
    through_n = through_e = None
    for i, path in enumerate(trace.paths):
        for (pr, pc, out) in path.visited:
            if (pr, pc) == (r, c):
                if out == "N":
                    through_n = i
                elif out == "E":
                    through_e = i
    if through_n is None or through_e is None or through_n == through_e:
        raise StructureViolation(f"tile {(r, c)} is not a bump of two distinct pipes")
    pair = (min(through_n, through_e), max(through_n, through_e))
    crossing_cells = trace.crossings.get(pair, ())
    if len(crossing_cells) != 1:
        raise StructureViolation(
            f"pipes {pair} cross {len(crossing_cells)} times, expected once")
    return class_of_polygon_edge(cell_edge(*crossing_cells[0], m), n, k)


def orbit_flip(t: CylinderTriangulation, e: EdgeClass) -> tuple[CylinderTriangulation, EdgeClass]:
    """Replace class e by the unique other class completing T minus e.

    Both backends run on every call and must name the same class; the
    rebuilt family is validated through the periodic polygon image.
    """
    k = t.surface.k
    if k != 2:
        raise LengthPrecondition(f"orbit flips are defined for k=2, got k={k}")
    if e not in t.class_set():
        raise NotInTriangulation(f"{e} is not a class of this triangulation")
    if not e.is_relevant(k):
        raise NotRelevant(f"{e} has length {e.length} <= k={k}, not flippable")
    f_stars = _flip_via_stars(t, e)
    f_chevron = _flip_via_chevron(t, e)
    if f_stars != f_chevron:
        raise StructureViolation(
            f"flip backends disagree on {e}: stars give {f_stars}, "
            f"chevron gives {f_chevron}")
    classes = tuple(sorted(set(t.classes) - {e} | {f_stars}))
    flipped = CylinderTriangulation(t.surface, classes)
    phi(flipped)
    return flipped, f_stars


@dataclass(frozen=True)
class FlipGraph:
    vertices: tuple[CylinderTriangulation, ...]
    adjacency: tuple[tuple[int, int, EdgeClass], ...]
    degrees: tuple[int, ...]
    component_count: int


def build_flip_graph(n: int) -> FlipGraph:
    """The graph of n-periodic 2-triangulations joined by orbit flips.

    Every enumerated triangulation seeds the closure, so a flip landing
    outside the enumeration is caught rather than silently extending the
    vertex set.  Adjacency entries are directed: (i, j, class removed
    from vertex i).  Component count is reported, never asserted.
    """
    if n > FLIP_GRAPH_BUDGET:
        raise TooLarge(f"flip graph budget is n <= {FLIP_GRAPH_BUDGET}, got n={n}")
    vertices = tuple(enumerate_cylinder(cylinder(n, 2)))
    index = {t.class_set(): i for i, t in enumerate(vertices)}
    adjacency = []
    seen: dict[tuple[int, int], EdgeClass] = {}
    for i, t in enumerate(vertices):
        for e in t.relevant_classes():
            flipped, f = orbit_flip(t, e)
            j = index.get(flipped.class_set())
            if j is None:
                raise StructureViolation(
                    f"flip of {e} leaves the enumerated set at vertex {i}")
            if j == i:
                raise StructureViolation(f"flip of {e} at vertex {i} is a self-loop")
            if (i, j) in seen and seen[i, j] != e:
                raise StructureViolation(
                    f"parallel flip edges between vertices {i} and {j}")
            seen[i, j] = e
            adjacency.append((i, j, e))
    for (i, j) in seen:
        if (j, i) not in seen:
            raise StructureViolation(f"flip edge {i}->{j} has no reverse")
    degrees = tuple(sum(1 for (i, _, _) in adjacency if i == v) for v in range(len(vertices)))
    component_count = _count_components(len(vertices), seen)
    return FlipGraph(vertices, tuple(sorted(adjacency)), degrees, component_count)


def _count_components(order: int, seen: dict) -> int:
    neighbors: list[set[int]] = [set() for _ in range(order)]
    for (i, j) in seen:
        neighbors[i].add(j)
        neighbors[j].add(i)
    unvisited = set(range(order))
    components = 0
    while unvisited:
        components += 1
        stack = [unvisited.pop()]
        while stack:
            for nxt in neighbors[stack.pop()]:
                if nxt in unvisited:
                    unvisited.remove(nxt)
                    stack.append(nxt)
    return components


def find_multi_representative_stars(max_n: int) -> list[dict]:
    """Scan enumerations for stars holding two translates of one relevant class.

    These exercise the delicate flip case where the removed class meets a
    holder star more than once.  Returns a witness per (n, triangulation,
    star) instance; an empty list for the range scanned means the case
    never arises there and should be reported, not ignored.
    """
    if max_n > ENUMERATION_BUDGET.get(2, 0):
        raise TooLarge(f"enumeration budget is n <= {ENUMERATION_BUDGET[2]} for k=2")
    witnesses = []
    for n in range(1, max_n + 1):
        for idx, t in enumerate(enumerate_cylinder(cylinder(n, 2))):
            for star in stars_of(t):
                per_class = Counter(edge_class_of(edge, n) for edge in star.edges)
                repeated = sorted(
                    c for c, count in per_class.items()
                    if count >= 2 and c.is_relevant(2))
                if repeated:
                    witnesses.append({
                        "n": n,
                        "triangulation_index": idx,
                        "star_vertices": list(star.vertices),
                        "repeated_classes": [[c.rep.a, c.rep.b] for c in repeated],
                    })
    return witnesses


def flip_graph_dot(g: FlipGraph) -> str:
    """DOT text, one undirected edge per flip pair, labeled by the class
    removed from the lower-index endpoint."""
    lines = ["graph flips {"]
    for i in range(len(g.vertices)):
        lines.append(f"  t{i};")
    for (i, j, e) in g.adjacency:
        if i < j:
            lines.append(f'  t{i} -- t{j} [label="{e.rep.a}-{e.rep.b}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def flip_graph_json(g: FlipGraph) -> dict:
    removed = {(i, j): e for (i, j, e) in g.adjacency}
    edges = []
    for (i, j, e) in g.adjacency:
        if i < j:
            back = removed[j, i]
            edges.append({
                "i": i,
                "j": j,
                "removed_i": [e.rep.a, e.rep.b],
                "removed_j": [back.rep.a, back.rep.b],
            })
    return {
        "n": g.vertices[0].surface.n if g.vertices else None,
        "k": 2,
        "vertex_count": len(g.vertices),
        "vertices": [
            [[c.rep.a, c.rep.b] for c in t.classes] for t in g.vertices
        ],
        "edges": edges,
        "degrees": list(g.degrees),
        "component_count": g.component_count,
    }
