"""Half-cylinder triangulations: classes, enumeration, angles and stars."""

from __future__ import annotations

import pytest

from multitri import (
    Edge,
    TooLarge,
    canonical_star,
    check_maximal_lifting,
    cylinder,
    edge_class_of,
    enumerate_cylinder,
    expected_class_count,
    find_angles,
    relevant_class_candidates,
    short_classes,
    star_of_angle,
    stars_of,
    unique_spanning_class,
    validate_cylinder_triangulation,
)
from multitri.errors import LengthPrecondition

from conftest import CYLINDER_COUNTS_K2


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_enumeration_counts(n):
    ts = enumerate_cylinder(cylinder(n, 2))
    assert len(ts) == CYLINDER_COUNTS_K2[n]
    assert len({t.classes for t in ts}) == len(ts)


def test_enumeration_budget():
    with pytest.raises(TooLarge):
        enumerate_cylinder(cylinder(6, 2))
    with pytest.raises(TooLarge):
        enumerate_cylinder(cylinder(3, 2), max_n=2)


def test_class_census():
    n, k = 3, 2
    shorts = short_classes(n, k)
    cands = relevant_class_candidates(n, k)
    assert len(shorts) == k * n
    assert len(cands) == (k * n - k) * n  # lengths k+1..kn, n reps each
    assert expected_class_count(n, k) == k * (2 * n - 1)


def test_every_triangulation_valid_with_expected_count():
    for n in (1, 2, 3):
        want = expected_class_count(n, 2)
        for t in enumerate_cylinder(cylinder(n, 2)):
            validate_cylinder_triangulation(t)
            assert len(t.classes) == want
            assert len(t.relevant_classes()) == 2 * (n - 1)


def test_unique_spanning_class():
    for n in (1, 2, 3):
        for t in enumerate_cylinder(cylinder(n, 2)):
            span = unique_spanning_class(t)
            assert span.length == 2 * n
            others = [c for c in t.classes if c.length == 2 * n]
            assert others == [span]


def test_contains_edge_respects_translation(t_left):
    assert t_left.contains_edge(Edge(1, 6))
    assert t_left.contains_edge(Edge(-2, 3))
    assert t_left.contains_edge(Edge(4, 9))
    assert not t_left.contains_edge(Edge(2, 7))


def test_angle_census(t_left):
    angles = find_angles(t_left)
    assert len(angles) == 17
    relevant = [a for a in angles if a.relevant]
    assert len(relevant) == 9
    # apexes live in one fundamental window
    assert {a.v for a in relevant} == {0, 1}


def test_angle_sides_are_lift_edges(t_left):
    for a in find_angles(t_left):
        for side in a.sides():
            assert t_left.contains_edge(side)


# Verified by hand from the C_3 flip example: each relevant angle resolves
# to one of the two stars, written here by their canonical visiting order.
STAR_A = (1, 4, 9, 3, 6)
STAR_B = (0, 2, 4, 1, 3)
ANGLE_TO_STAR = {
    (3, 0, 2): STAR_B,
    (6, 0, 3): STAR_A,
    (-5, 0, -6): STAR_A,
    (-3, 0, -5): STAR_A,
    (-2, 0, -3): STAR_B,
    (4, 1, 3): STAR_B,
    (6, 1, 4): STAR_A,
    (-2, 1, 6): STAR_A,
    (-1, 1, -2): STAR_B,
}


def test_star_of_angle_resolves_known_stars(t_left):
    seen = {}
    for a in find_angles(t_left):
        if not a.relevant:
            continue
        star = star_of_angle(t_left, a)
        canon = canonical_star(star, 3)
        seen[(a.u, a.v, a.w)] = canon.vertices
        # the angle's apex and far vertices belong to the star found
        assert a.v in star.vertex_set
        assert {a.u, a.w} <= star.vertex_set
    assert seen == ANGLE_TO_STAR


def test_star_of_angle_rejects_irrelevant(t_left):
    bland = next(a for a in find_angles(t_left) if not a.relevant)
    with pytest.raises(LengthPrecondition):
        star_of_angle(t_left, bland)


def test_stars_of_counts():
    for n in (1, 2, 3):
        for t in enumerate_cylinder(cylinder(n, 2)):
            stars = stars_of(t)
            assert len(stars) == n - 1
            for s in stars:
                assert all(t.contains_edge(e) for e in s.edges)


def test_stars_of_t_left(t_left):
    stars = stars_of(t_left)
    assert sorted(s.vertices for s in stars) == sorted([STAR_A, STAR_B])


def test_star_edges_include_spanning_translate(t_left):
    (a_star,) = [s for s in stars_of(t_left) if s.vertices == STAR_A]
    assert Edge(3, 9) in a_star.edge_set()


def test_maximal_lifting_clean():
    for n in (1, 2, 3):
        for t in enumerate_cylinder(cylinder(n, 2)):
            rep = check_maximal_lifting(t)
            assert rep["ok"]
            assert rep["addable"] == []
            assert rep["violations"] == []


def test_maximal_lifting_flags_incomplete(t_left):
    from multitri import CylinderTriangulation

    pruned = tuple(c for c in t_left.classes if (c.rep.a, c.rep.b) != (1, 4))
    rep = check_maximal_lifting(CylinderTriangulation(t_left.surface, pruned))
    assert not rep["ok"]
    assert (1, 4) in {(c.rep.a, c.rep.b) for c in rep["addable"]}
