"""Triangulation JSON, ASCII grids, and SVG for pipe dreams.

The JSON schema is strict: exactly the fields surface/n/k/edges, with
cylinder edges given as canonical class representatives.  Schema
problems raise ValueError (a usage error at the CLI boundary), while
structural problems inside the library keep their own error types.
"""

from __future__ import annotations

from .cylinder import CylinderTriangulation
from .pipedreams import GLYPHS, PipeDream
from .polygon import PolygonTriangulation
from .surfaces import CYLINDER, POLYGON, Edge, EdgeClass, cylinder, polygon

_SCHEMA_FIELDS = {"surface", "n", "k", "edges"}


def _require_int(value, name: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f"{name} must be an integer, got {value!r}")
    return value


def parse_triangulation(obj) -> PolygonTriangulation | CylinderTriangulation:
    """Strict parse of the triangulation JSON object."""
    if not isinstance(obj, dict):
        raise ValueError("triangulation JSON must be an object")
    unknown = set(obj) - _SCHEMA_FIELDS
    if unknown:
        raise ValueError(f"unknown fields {sorted(unknown)}")
    missing = _SCHEMA_FIELDS - set(obj)
    if missing:
        raise ValueError(f"missing fields {sorted(missing)}")
    kind = obj["surface"]
    if kind not in (POLYGON, CYLINDER):
        raise ValueError(f"surface must be 'polygon' or 'cylinder', got {kind!r}")
    n = _require_int(obj["n"], "n")
    k = _require_int(obj["k"], "k")
    if n < 1 or k < 1:
        raise ValueError(f"n and k must be positive, got n={n} k={k}")
    raw = obj["edges"]
    if not isinstance(raw, list):
        raise ValueError("edges must be a list of [a, b] pairs")
    pairs = []
    for item in raw:
        if (
            not isinstance(item, list)
            or len(item) != 2
            or any(isinstance(x, bool) or not isinstance(x, int) for x in item)
        ):
            raise ValueError(f"edge {item!r} is not an [a, b] integer pair")
        a, b = item
        if a >= b:
            raise ValueError(f"edge [{a}, {b}] must have a < b")
        pairs.append((a, b))
    if len(set(pairs)) != len(pairs):
        raise ValueError("duplicate edges")
    if kind == POLYGON:
        for a, b in pairs:
            if not (0 <= a and b < n):
                raise ValueError(f"edge [{a}, {b}] outside vertex range 0..{n - 1}")
        return PolygonTriangulation(
            polygon(n, k), tuple(sorted(Edge(a, b) for a, b in pairs)))
    for a, b in pairs:
        if not (0 <= a < n and b <= a + k * n):
            raise ValueError(
                f"[{a}, {b}] is not a canonical class representative "
                f"(need 0 <= a < {n}, a < b <= a + {k * n})")
    classes = tuple(sorted(EdgeClass(Edge(a, b), n) for a, b in pairs))
    return CylinderTriangulation(cylinder(n, k), classes)


def serialize_triangulation(t: PolygonTriangulation | CylinderTriangulation) -> dict:
    if isinstance(t, PolygonTriangulation):
        edges = [[e.a, e.b] for e in sorted(t.edges)]
    else:
        edges = [[c.rep.a, c.rep.b] for c in sorted(t.classes)]
    return {
        "surface": t.surface.kind,
        "n": t.surface.n,
        "k": t.surface.k,
        "edges": edges,
    }


def grid_lines(tiles: dict) -> list[str]:
    """Bounding-box rows of glyphs, top row first, absent cells dotted."""
    if not tiles:
        return []
    rows = [r for r, _ in tiles]
    cols = [c for _, c in tiles]
    lo, hi = min(cols), max(cols)
    lines = []
    for r in range(max(rows), min(rows) - 1, -1):
        lines.append("".join(
            GLYPHS[tiles[r, c]] if (r, c) in tiles else "."
            for c in range(lo, hi + 1)))
    return lines


def render_ascii(p: PipeDream) -> str:
    header = (
        f"shape={p.shape} n={p.m} k={p.k} "
        f"row0={max(r for r, _ in p.tiles)} col0={min(c for _, c in p.tiles)}")
    return "\n".join([header] + grid_lines(p.tiles)) + "\n"


TILE = 24


def _tile_paths(kind: str, x: int, y: int) -> list[str]:
    half = TILE // 2
    wn = (
        f"M {x} {y + half} A {half} {half} 0 0 1 {x + half} {y}"
    )
    se = (
        f"M {x + half} {y + TILE} A {half} {half} 0 0 1 {x + TILE} {y + half}"
    )
    we = f"M {x} {y + half} L {x + TILE} {y + half}"
    sn = f"M {x + half} {y + TILE} L {x + half} {y}"
    return {
        "bump": [wn, se],
        "cross": [we, sn],
        "jelbow": [wn],
        "felbow": [se],
    }[kind]


def render_svg(p: PipeDream) -> str:
    """Fixed 24-unit tiles; bumps as quarter-circle arcs, crosses as segments."""
    rows = [r for r, _ in p.tiles]
    cols = [c for _, c in p.tiles]
    rmax, cmin = max(rows), min(cols)
    width = (max(cols) - cmin + 1) * TILE
    height = (rmax - min(rows) + 1) * TILE
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">',
        f"<!-- shape={p.shape} n={p.m} k={p.k} -->",
    ]
    for (r, c) in sorted(p.tiles, key=lambda rc: (-rc[0], rc[1])):
        x = (c - cmin) * TILE
        y = (rmax - r) * TILE
        parts.append(
            f'<rect x="{x}" y="{y}" width="{TILE}" height="{TILE}" '
            'fill="none" stroke="#ccc" stroke-width="1"/>')
        for d in _tile_paths(p.tiles[r, c], x, y):
            parts.append(
                f'<path d="{d}" fill="none" stroke="#000" stroke-width="2"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def pipedream_json(p: PipeDream) -> dict:
    return {
        "shape": p.shape,
        "n": p.m,
        "k": p.k,
        "tiles": [
            [r, c, p.tiles[r, c]]
            for (r, c) in sorted(p.tiles, key=lambda rc: (-rc[0], rc[1]))
        ],
    }
