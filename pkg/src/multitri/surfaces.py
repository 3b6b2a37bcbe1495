"""Vertices, edges, cyclic order and crossing predicates.

Two pictures coexist.  On the convex polygon the vertices are the residues
0..n-1 in counterclockwise order and crossing means cyclic interleaving of
endpoints.  On the half-cylinder everything is drawn on the universal cover,
an infinite strip with one integer vertex per unit; an edge class is the set
of translates of a cover edge by multiples of n, and crossing questions are
answered on a finite window of translates.

The cyclic order used on the cover treats the strip as a circle closed by a
single point at infinity: a tuple of distinct integers is cyclically ordered
iff some rotation of it is strictly increasing.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import EdgeTooLong

POLYGON = "polygon"
CYLINDER = "cylinder"


@dataclass(frozen=True, order=True)
class Edge:
    """An edge as an ordered vertex pair, normalized so that a < b."""

    a: int
    b: int

    def __post_init__(self):
        if self.a == self.b:
            raise ValueError(f"degenerate edge [{self.a},{self.b}]")
        if self.a > self.b:
            a, b = self.b, self.a
            object.__setattr__(self, "a", a)
            object.__setattr__(self, "b", b)

    @property
    def length(self) -> int:
        return self.b - self.a

    def shifted(self, d: int) -> "Edge":
        return Edge(self.a + d, self.b + d)

    def __repr__(self):
        return f"[{self.a},{self.b}]"


@dataclass(frozen=True)
class SurfaceDesc:
    """Which surface we are on: polygon or cylinder, with n vertices, order k."""

    kind: str
    n: int
    k: int

    def __post_init__(self):
        if self.kind not in (POLYGON, CYLINDER):
            raise ValueError(f"unknown surface kind {self.kind!r}")
        if self.n < 1 or self.k < 1:
            raise ValueError(f"need n >= 1 and k >= 1, got n={self.n} k={self.k}")
        if self.kind == POLYGON and self.n < 3:
            raise ValueError("polygon needs at least 3 vertices")


def polygon(n: int, k: int) -> SurfaceDesc:
    return SurfaceDesc(POLYGON, n, k)


def cylinder(n: int, k: int) -> SurfaceDesc:
    return SurfaceDesc(CYLINDER, n, k)


@dataclass(frozen=True, order=True)
class EdgeClass:
    """A translation orbit of cover edges, named by its canonical representative.

    The representative has left endpoint in [0, n); every member of the class
    is rep shifted by a multiple of n.
    """

    rep: Edge
    n: int

    def __post_init__(self):
        if not 0 <= self.rep.a < self.n:
            raise ValueError(f"representative {self.rep} not canonical for period {self.n}")

    @property
    def length(self) -> int:
        return self.rep.length

    def translate(self, t: int) -> Edge:
        return self.rep.shifted(t * self.n)

    def is_relevant(self, k: int) -> bool:
        return k < self.length <= k * self.n

    def is_spanning(self, k: int) -> bool:
        return self.length == k * self.n

    def __repr__(self):
        return f"~{self.rep!r}"


def edge_class_of(edge: Edge, n: int) -> EdgeClass:
    """The class containing a cover edge, with the representative canonicalized."""
    shift = edge.a % n - edge.a
    return EdgeClass(edge.shifted(shift), n)


def cyclic_length(edge: Edge, n: int) -> int:
    """Length of a polygon edge in the cyclic metric."""
    d = (edge.b - edge.a) % n
    return min(d, n - d)


def cyclically_ordered(*xs: int) -> bool:
    """True iff the distinct integers xs are met in this order going around the circle."""
    if len(set(xs)) != len(xs):
        return False
    descents = sum(xs[i] > xs[(i + 1) % len(xs)] for i in range(len(xs)))
    return descents <= 1


def crosses(e: Edge, f: Edge, surface: SurfaceDesc) -> bool:
    """Do the two edges cross in the interior of the surface?

    Edges sharing an endpoint never cross.  On the cylinder the test is run
    on cover edges, where cyclic interleaving degenerates to plain
    interleaving of integers.
    """
    if surface.kind == CYLINDER:
        return cover_crosses(e, f)
    if len({e.a, e.b, f.a, f.b}) != 4:
        return False
    return (e.a < f.a < e.b) != (e.a < f.b < e.b)


def cover_crosses(e: Edge, f: Edge) -> bool:
    return e.a < f.a < e.b < f.b or f.a < e.a < f.b < e.b


def has_clique(adj: list[int], size: int, within: int | None = None) -> bool:
    """Is there a clique of the given size in the graph given by bitmask rows?

    `within` restricts the search to a vertex subset (as a bitmask).  Vertices
    are picked in increasing index order, so every clique is visited once.
    """
    if size <= 0:
        return True
    full = within if within is not None else (1 << len(adj)) - 1

    def grow(cand: int, need: int) -> bool:
        if need == 0:
            return True
        while cand:
            if cand.bit_count() < need:
                return False
            v = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            if grow(cand & adj[v], need - 1):
                return True
        return False

    return grow(full, size)


def _crossing_capable(e: Edge, k: int, surface: SurfaceDesc) -> bool:
    # An edge of length l can sit in a pairwise-crossing family of at most l
    # edges, so length <= k never contributes to a (k+1)-crossing.
    if surface.kind == POLYGON:
        return cyclic_length(e, surface.n) > k
    return e.length > k


def has_k_plus_1_crossing(edges, k: int, surface: SurfaceDesc) -> bool:
    """Does the edge set contain k+1 pairwise-crossing edges?"""
    longs = sorted(e for e in set(edges) if _crossing_capable(e, k, surface))
    if len(longs) <= k:
        return False
    adj = [0] * len(longs)
    for i, e in enumerate(longs):
        for j in range(i + 1, len(longs)):
            if crosses(e, longs[j], surface):
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return has_clique(adj, k + 1)


def window_translations(k: int) -> range:
    """Translation indices used when truncating the infinite lift."""
    return range(-(2 * k + 1), 2 * k + 2)


def periodic_crossing_window(classes, k: int, n: int) -> set[Edge]:
    """A finite truncation of the lift that is wide enough for crossing tests.

    Every member of a pairwise-crossing family of edges of length <= kn has
    its left endpoint within kn of any fixed member's, so translates t in
    [-(2k+1), 2k+1] of canonical representatives cover every crossing that
    touches a representative.  The doubled-window property test backs this up.
    """
    for c in classes:
        if c.length > k * n:
            raise EdgeTooLong(
                f"class {c} has length {c.length} > k*n = {k * n}")
    return {c.translate(t) for c in classes for t in window_translations(k)}


def is_periodic_crossing_free(classes, k: int, n: int, radius: int | None = None) -> bool:
    """Is the lifted edge set free of (k+1)-crossings?

    By translation invariance a crossing exists iff one exists containing an
    edge whose left endpoint lies in [0, n), so only those are used as
    anchors.  `radius` widens the translation window (test hook only).
    """
    classes = list(classes)
    for c in classes:
        if c.length > k * n:
            raise EdgeTooLong(
                f"class {c} has length {c.length} > k*n = {k * n}")
    ts = window_translations(k) if radius is None else range(-radius, radius + 1)
    window = sorted({c.translate(t) for c in classes for t in ts})
    longs = [e for e in window if e.length > k]
    adj = [0] * len(longs)
    for i, e in enumerate(longs):
        for j in range(i + 1, len(longs)):
            if cover_crosses(e, longs[j]):
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    for i, e in enumerate(longs):
        if 0 <= e.a < n and has_clique(adj, k, within=adj[i]):
            return False
    return True
