import random
from fractions import Fraction

from planeloc.geom import Point, Segment
from planeloc.results import InFace, OnEdge, OnVertex
from planeloc.staticloc import build_static, query_static
from planeloc.subdivision import build, locate_naive

from test_subdivision import SQUARE, random_disjoint_segments


def agree(snap, loc, p):
    a = locate_naive(snap, p)
    b = query_static(loc, p)
    assert type(a) is type(b), (p, a, b)
    if isinstance(a, InFace):
        assert a.name == b.name, (p, a, b)
    elif isinstance(a, OnEdge):
        assert a.segment == b.segment, (p, a, b)


def test_empty_snapshot():
    snap = build([])
    loc = build_static(snap)
    for p in (Point(0, 0), Point(-5, 7), Point(1000, -1000)):
        assert query_static(loc, p) == InFace(1)


def test_square_grid_sweep():
    snap = build(SQUARE)
    loc = build_static(snap, seed=3)
    assert isinstance(query_static(loc, Point(2, 2)), InFace)
    assert query_static(loc, Point(2, 2)).name != 1
    assert query_static(loc, Point(5, 5)) == InFace(1)
    assert isinstance(query_static(loc, Point(2, 0)), OnEdge)
    assert isinstance(query_static(loc, Point(0, 0)), OnVertex)
    for xi in range(-2, 12):
        for yi in range(-2, 12):
            p = Point(Fraction(xi, 2), Fraction(yi, 2))
            agree(snap, loc, p)


def test_attached_segments_and_verticals():
    segs = [
        Segment(Point(0, 0), Point(4, 0)),
        Segment(Point(4, 0), Point(4, 4)),   # vertical
        Segment(Point(4, 4), Point(0, 4)),
        Segment(Point(0, 4), Point(0, 0)),   # vertical
        Segment(Point(0, 0), Point(-3, 2)),  # attached at a vertex
        Segment(Point(2, 2), Point(3, 3)),   # floating inside
    ]
    snap = build(segs)
    loc = build_static(snap, seed=11)
    for xi in range(-8, 12):
        for yi in range(-4, 12):
            p = Point(Fraction(xi, 2), Fraction(yi, 3))
            agree(snap, loc, p)


def test_random_snapshots_agree_with_naive():
    rng = random.Random(1812)
    for trial in range(12):
        n = rng.choice((5, 15, 40, 80))
        segs = random_disjoint_segments(rng, n, box=400, reach=70)
        snap = build(segs)
        loc = build_static(snap, seed=trial)
        for _ in range(400):
            p = Point(rng.randint(-20, 420), rng.randint(-20, 420))
            agree(snap, loc, p)
        # Also probe exactly at vertices and on edge interiors.
        for s in segs[:10]:
            agree(snap, loc, s.a)
            agree(snap, loc, s.b)
            if (s.a.x + s.b.x) % 2 == 0 and (s.a.y + s.b.y) % 2 == 0:
                mid = Point((s.a.x + s.b.x) // 2, (s.a.y + s.b.y) // 2)
                agree(snap, loc, mid)


def test_larger_random_agreement_with_rationals():
    rng = random.Random(99)
    segs = random_disjoint_segments(rng, 250, box=2000, reach=60)
    snap = build(segs)
    loc = build_static(snap, seed=5)
    for _ in range(1500):
        p = Point(
            Fraction(rng.randint(-2000, 22000), 10),
            Fraction(rng.randint(-2000, 22000), 10),
        )
        agree(snap, loc, p)


def test_structure_size_linear():
    rng = random.Random(7)
    ratios = []
    for n in (100, 400, 1000):
        segs = random_disjoint_segments(rng, n, box=n * 12, reach=40)
        snap = build(segs)
        loc = build_static(snap, seed=1)
        ratios.append(loc.node_count() / n)
    # Expected O(n) nodes; pin a generous constant for the measured c.
    assert max(ratios) <= 24, ratios
