"""Nerve, Lebesgue number, refinement, and nerve tower tests."""

import random
from fractions import Fraction

from towertop.nerve import (
    BallCover,
    PointSample,
    cech_tower,
    distance,
    lebesgue_number,
    nerve,
    refinement_map,
)
from towertop.simplicial import homology, induced_map
from towertop.tower import homology_tower

import pytest


def diamond_sample():
    """Twelve points on a max-metric circle of radius 3.

    Between nearby points the max distance equals the number of steps
    along the perimeter, so balls of integer radius trace out arcs.
    """
    pts = [
        (3, 0), (2, 1), (1, 2), (0, 3), (-1, 2), (-2, 1),
        (-3, 0), (-2, -1), (-1, -2), (0, -3), (1, -2), (2, -1),
    ]
    return PointSample(pts, range(12))


def three_arcs():
    return BallCover([(0, 2), (4, 2), (8, 2)])


def six_arcs():
    return BallCover([(11, 1), (1, 1), (3, 1), (5, 1), (7, 1), (9, 1)])


# -- nerves ---------------------------------------------------------------


def test_three_arc_nerve_is_a_hollow_triangle():
    s = diamond_sample()
    n = nerve(three_arcs(), s)
    assert len(n.vertices) == 3
    assert homology(n, 1).group.invariants == (1, ())
    assert homology(n, 0).group.invariants == (1, ())
    assert not any(len(x) == 3 for x in n.simplexes)


def test_six_arc_nerve_is_a_hexagon():
    s = diamond_sample()
    n = nerve(six_arcs(), s)
    assert len(n.vertices) == 6
    assert sorted(x for x in n.simplexes if len(x) == 2) == [
        (0, 1), (0, 5), (1, 2), (2, 3), (3, 4), (4, 5)
    ]
    assert homology(n, 1).group.invariants == (1, ())


def test_single_element_nerve_is_a_vertex():
    s = PointSample([(0, 0), (1, 0)])
    n = nerve(BallCover([(0, 5)]), s)
    assert n.simplexes == frozenset({(0,)})


def test_disjoint_elements_give_isolated_vertices():
    s = PointSample([(0, 0), (10, 0)])
    n = nerve(BallCover([(0, 1), (1, 1)]), s)
    assert len(n.vertices) == 2
    assert not any(len(x) == 2 for x in n.simplexes)


def test_elements_with_empty_trace_still_appear():
    s = PointSample([(0, 0)])
    n = nerve(BallCover([(0, Fraction(1, 2)), (0, Fraction(1, 4))]), s)
    assert set(n.vertices) == {0, 1}


def test_nerve_is_monotone_in_the_cover():
    rng = random.Random(11)
    for _ in range(15):
        count = rng.randint(2, 12)
        pts = [(rng.randint(0, 9), rng.randint(0, 9)) for _ in range(count)]
        s = PointSample(pts)
        elements = [
            (rng.randrange(count), Fraction(rng.randint(1, 8), rng.randint(1, 3)))
            for _ in range(rng.randint(1, 5))
        ]
        small = nerve(BallCover(elements), s)
        grown = nerve(
            BallCover(elements + [(rng.randrange(count), rng.randint(1, 6))]), s
        )
        assert small.simplexes <= grown.simplexes


# -- lebesgue numbers ------------------------------------------------------


def test_lebesgue_single_ball_slack():
    s = PointSample([(0,), (3,)])
    assert lebesgue_number(s, BallCover([(0, Fraction(7, 2))])) == Fraction(1, 2)


def test_lebesgue_two_unit_balls():
    s = PointSample([(0,), (1,)])
    assert lebesgue_number(s, BallCover([(0, 1), (1, 1)])) == 1


def test_lebesgue_boundary_point_gives_zero():
    s = PointSample([(0,), (1,)])
    assert lebesgue_number(s, BallCover([(0, 1)])) == 0


def test_lebesgue_uncovered_point_raises():
    s = PointSample([(0,), (2,)])
    with pytest.raises(ValueError, match="misses sample point 1"):
        lebesgue_number(s, BallCover([(0, 1)]))


def test_lebesgue_maximality_brute_force():
    rng = random.Random(23)
    done = 0
    while done < 30:
        count = rng.randint(1, 12)
        pts = [(rng.randint(0, 12), rng.randint(0, 12)) for _ in range(count)]
        s = PointSample(pts)
        cover = BallCover(
            [
                (rng.randrange(count), Fraction(rng.randint(1, 30), rng.randint(1, 4)))
                for _ in range(rng.randint(1, 6))
            ]
        )
        slacks = [
            max(r - distance(p, pts[c]) for c, r in cover.elements) for p in pts
        ]
        if min(slacks) < 0:
            with pytest.raises(ValueError):
                lebesgue_number(s, cover)
            continue
        lam = lebesgue_number(s, cover)
        assert lam == min(slacks)
        assert all(depth >= lam for depth in slacks)
        # maximality: any strictly larger bound fails at some point
        bigger = lam + Fraction(1, 1000)
        assert any(depth < bigger for depth in slacks)
        done += 1


# -- refinement ------------------------------------------------------------


def test_identical_covers_refine_by_the_identity():
    s = diamond_sample()
    r = refinement_map(three_arcs(), three_arcs(), s)
    assert r.vertex_map == {0: 0, 1: 1, 2: 2}


def test_halves_refine_into_their_parent():
    s = PointSample([(0,), (1,)])
    parent = BallCover([(0, 2)])
    halves = BallCover([(0, Fraction(1, 4)), (1, Fraction(1, 4))])
    r = refinement_map(halves, parent, s)
    assert r.vertex_map == {0: 0, 1: 0}
    assert set(r.vertex_map.values()) == set(range(len(parent.elements)))


def test_circle_refinement_induces_a_degree_one_map():
    s = diamond_sample()
    r = refinement_map(six_arcs(), three_arcs(), s)
    assert r.vertex_map == {0: 0, 1: 0, 2: 1, 3: 1, 4: 2, 5: 2}
    assert induced_map(r, 1).canonical_matrix().rows in (((1,),), ((-1,),))


def test_refinement_needs_trace_containment():
    s = diamond_sample()
    with pytest.raises(ValueError, match="fine element"):
        refinement_map(three_arcs(), six_arcs(), s)


def test_refinement_contiguity_and_induced_agreement():
    rng = random.Random(37)
    for _ in range(15):
        count = rng.randint(3, 20)
        pts = [(rng.randint(0, 15), rng.randint(0, 15)) for _ in range(count)]
        s = PointSample(pts)
        centers = [rng.randrange(count) for _ in range(rng.randint(2, 6))]
        r1 = Fraction(rng.randint(1, 8), 2)
        r2, r3 = r1 + rng.randint(1, 4), r1 + 4 + rng.randint(1, 4)
        fine = BallCover([(c, r1) for c in centers])
        mid = BallCover([(c, r2) for c in centers])
        coarse = BallCover([(c, r3) for c in centers])
        lower = refinement_map(fine, mid, s)
        upper = refinement_map(mid, coarse, s)
        composed = upper.compose(lower)
        direct = refinement_map(fine, coarse, s)
        target = nerve(coarse, s)
        for simplex in composed.source.simplexes:
            joint = set(composed.image_simplex(simplex)) | set(
                direct.image_simplex(simplex)
            )
            assert target.has_simplex(tuple(joint))
        for n in (0, 1):
            assert (
                induced_map(composed, n).canonical_matrix().rows
                == induced_map(direct, n).canonical_matrix().rows
            )


# -- towers ----------------------------------------------------------------


def test_shrinking_tower_loses_the_circle():
    s = diamond_sample()
    t = cech_tower(s, [1, Fraction(1, 2)])
    assert t.certificate is None
    h1 = homology_tower(t, 1)
    assert [g.invariants for g in h1.levels] == [(1, ()), (0, ())]


def test_single_point_tower_is_constant():
    s = PointSample([(0, 0)], [0])
    t = cech_tower(s, [1, Fraction(1, 2), Fraction(1, 4)])
    assert len(t.levels) == 3
    assert all(k.simplexes == frozenset({(0,)}) for k in t.levels)


def test_fixed_cover_rides_along_every_level():
    s = PointSample([(0, 0), (10, 0)], [0])
    t = cech_tower(s, [2, 1], fixed_cover=BallCover([(1, 1)]))
    for level in t.levels:
        assert set(level.vertices) == {0, 1}
        assert not any(len(x) == 2 for x in level.simplexes)


def test_tower_preconditions():
    s = diamond_sample()
    with pytest.raises(ValueError, match="nonempty compactum mark"):
        cech_tower(PointSample([(0, 0)]), [1])
    with pytest.raises(ValueError, match="strictly decreasing"):
        cech_tower(s, [1, 1])
    with pytest.raises(ValueError, match="positive"):
        cech_tower(s, [1, 0])
    with pytest.raises(ValueError, match="at least one radius"):
        cech_tower(s, [])
    far = PointSample([(0, 0), (50, 0)], [0])
    with pytest.raises(ValueError, match="stage 1 fails to cover sample point 1"):
        cech_tower(far, [60, 1])


def test_exactness_guards():
    with pytest.raises(ValueError, match="exact rationals"):
        PointSample([(0.5, 0)])
    with pytest.raises(ValueError, match="exact rationals"):
        BallCover([(0, 0.5)])
    with pytest.raises(ValueError, match="ambient dimension"):
        PointSample([(0, 0), (1,)])
    with pytest.raises(ValueError, match="outside the sample"):
        PointSample([(0, 0)], [3])
    with pytest.raises(ValueError, match="radius must be positive"):
        BallCover([(0, -1)])
    with pytest.raises(ValueError, match="outside the sample"):
        nerve(BallCover([(5, 1)]), PointSample([(0, 0)]))
