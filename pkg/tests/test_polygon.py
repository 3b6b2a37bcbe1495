"""Polygon k-triangulations: enumeration, stars, flips, shift invariance.

The enumeration counts are frozen from a Hankel-determinant oracle
(det of the Catalan matrix [C_{n-i-j}]), computed independently of the
backtracking enumerator.
"""

from __future__ import annotations

import itertools

import pytest

from multitri import (
    Edge,
    KStar,
    TooLarge,
    all_edges,
    crosses,
    enumerate_polygon,
    enumerate_shift_invariant,
    expected_edge_count,
    is_shift_invariant,
    make_star,
    polygon,
    polygon_flip,
    relevant_candidates,
    short_edges,
    star_decomposition,
    validate_polygon_triangulation,
)
from multitri.errors import NotInTriangulation, NotRelevant

from conftest import POLYGON_COUNTS, make_polygon_triangulation


SMALL_CASES = [(5, 1), (6, 1), (7, 1), (8, 1),
               (5, 2), (6, 2), (7, 2), (8, 2),
               (7, 3), (8, 3), (9, 3)]


@pytest.mark.parametrize("n,k", SMALL_CASES)
def test_enumeration_matches_hankel_oracle(n, k):
    ts = enumerate_polygon(polygon(n, k))
    assert len(ts) == POLYGON_COUNTS[(n, k)]


def test_enumeration_respects_budget():
    with pytest.raises(TooLarge):
        enumerate_polygon(polygon(11, 2))
    # an explicit cap can lower the gate further
    with pytest.raises(TooLarge):
        enumerate_polygon(polygon(8, 2), max_n=7)


def test_edge_counts_and_validity():
    for n, k in ((8, 2), (9, 3)):
        want = expected_edge_count(n, k)
        assert want == k * (2 * n - 2 * k - 1)
        for t in enumerate_polygon(polygon(n, k)):
            assert len(t.edges) == want
            validate_polygon_triangulation(t)


def test_all_triangulations_distinct():
    ts = enumerate_polygon(polygon(8, 2))
    assert len({t.edges for t in ts}) == len(ts)


def test_short_edges_always_present():
    shorts = short_edges(8, 2)
    assert len(shorts) == 2 * 8
    for t in enumerate_polygon(polygon(8, 2)):
        assert shorts <= t.edge_set()


def test_relevant_candidates_partition():
    n, k = 9, 2
    cands = relevant_candidates(n, k)
    shorts = short_edges(n, k)
    assert len(cands) + len(shorts) == len(all_edges(n))
    assert not (set(cands) & shorts)


def test_make_star_pentagon():
    star = make_star((0, 1, 2, 3, 4))
    assert set(star.edges) == {Edge(0, 2), Edge(1, 3), Edge(2, 4),
                               Edge(0, 3), Edge(1, 4)}
    # visiting order hops k=2 vertices at a time
    assert star.vertices == (0, 2, 4, 1, 3)


def test_star_decomposition_counts():
    for n, k in ((8, 2), (7, 1), (9, 3)):
        for t in enumerate_polygon(polygon(n, k)):
            stars = star_decomposition(t)
            assert len(stars) == n - 2 * k
            for s in stars:
                assert set(s.edges) <= t.edge_set()


def test_star_decomposition_covers_relevant_edges():
    n, k = 8, 2
    for t in enumerate_polygon(polygon(n, k)):
        covered = set().union(*(set(s.edges) for s in star_decomposition(t)))
        for e in t.edges:
            if e in covered:
                continue
            # only edges short on the cycle may go uncovered
            assert min((e.b - e.a) % n, (e.a - e.b) % n) <= k


def test_polygon_flip_roundtrip():
    n, k = 8, 2
    for t in enumerate_polygon(polygon(n, k)):
        for e in sorted(t.edges):
            if e not in set(relevant_candidates(n, k)):
                continue
            t2, f = polygon_flip(t, e)
            validate_polygon_triangulation(t2)
            assert t2.edge_set() == (t.edge_set() - {e}) | {f}
            t3, g = polygon_flip(t2, f)
            assert t3.edge_set() == t.edge_set() and g == e


def test_polygon_flip_rejects_bad_edges():
    t = enumerate_polygon(polygon(8, 2))[0]
    absent = next(iter(set(relevant_candidates(8, 2)) - t.edge_set()))
    with pytest.raises(NotInTriangulation):
        polygon_flip(t, absent)
    with pytest.raises(NotRelevant):
        polygon_flip(t, Edge(0, 1))


def test_flip_changes_exactly_one_triangulation_edge():
    ts = enumerate_polygon(polygon(7, 2))
    index = {t.edge_set() for t in ts}
    for t in ts:
        for e in t.edge_set() & set(relevant_candidates(7, 2)):
            t2, _ = polygon_flip(t, e)
            assert t2.edge_set() in index
            assert len(t.edge_set() ^ t2.edge_set()) == 2


def test_shift_invariant_enumeration(shift3_invariant, shift6_invariant):
    inv = shift3_invariant
    assert len(inv) == 36
    for t in inv:
        assert is_shift_invariant(t, 3)
        validate_polygon_triangulation(t)
    # shift-3 invariance implies shift-6 invariance, never conversely here
    inv6 = shift6_invariant
    assert {t.edges for t in inv} <= {t.edges for t in inv6}
    assert all(is_shift_invariant(t, 6) for t in inv6)
    assert len(inv6) > len(inv)


def test_shift_invariant_are_genuinely_invariant(worked_12gon):
    assert is_shift_invariant(worked_12gon, 3)
    assert is_shift_invariant(worked_12gon, 6)
    t2, _ = polygon_flip(worked_12gon, Edge(0, 4))
    assert not is_shift_invariant(t2, 3)


def test_worked_example_is_enumerated(worked_12gon, shift3_invariant):
    assert len(worked_12gon.edges) == expected_edge_count(12, 2)
    validate_polygon_triangulation(worked_12gon)
    assert worked_12gon.edge_set() in {t.edge_set() for t in shift3_invariant}


def test_tiny_polygons_have_unique_triangulation():
    # below n = 2k+2 every diagonal is short, one triangulation: all edges
    ts = enumerate_polygon(polygon(5, 2))
    assert len(ts) == 1
    assert len(ts[0].edges) == 10
