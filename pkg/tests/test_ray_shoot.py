import random
from fractions import Fraction

import pytest

from planeloc.geom import Point, Segment, segments_interact
from planeloc.oracle import brute_shoot
from planeloc.rayshoot import RayShooter
from planeloc.results import ValidationFailure


def S(x1, y1, x2, y2):
    return Segment(Point(x1, y1), Point(x2, y2))


def test_insert_and_shoot_examples():
    rs = RayShooter()
    low = rs.insert(S(0, 0, 2, 0))
    high = rs.insert(S(0, 1, 2, 1))
    assert len(rs) == 2
    p = Point(1, Fraction(1, 2))
    assert rs.shoot(p) == high.segment
    assert rs.shoot(Point(1, 2)) is None
    assert rs.shoot(Point(1, -1)) == low.segment
    assert rs.shoot_handle(Point(1, -1)) is low


def test_delete_round_trips():
    rs = RayShooter()
    handles = [rs.insert(S(0, 2 * i, 3, 2 * i)) for i in range(3)]
    rs.delete(handles[1])
    assert rs.shoot(Point(1, 1)) == handles[2].segment
    rs.delete(handles[0])
    rs.delete(handles[2])
    assert rs.shoot(Point(1, 1)) is None and len(rs) == 0
    with pytest.raises(ValidationFailure):
        rs.delete(handles[0])
    with pytest.raises(ValidationFailure):
        rs.insert(S(0, 0, 1, 1)) and rs.insert(S(0, 0, 1, 1))


def test_containing_query():
    rs = RayShooter()
    rs.insert(S(0, 0, 4, 4))
    rs.insert(S(0, 4, 4, 8))
    assert rs.find_containing(Point(2, 2)) == S(0, 0, 4, 4)
    assert rs.find_containing(Point(2, 3)) is None
    assert rs.find_containing(Point(0, 0)) is None  # endpoints excluded


def random_segment(rng, box, reach):
    x1 = rng.randint(0, box)
    y1 = rng.randint(0, box)
    x2 = x1 + rng.randint(-reach, reach)
    y2 = y1 + rng.randint(-reach, reach)
    if (x1, y1) == (x2, y2):
        return None
    return Segment(Point(x1, y1), Point(x2, y2))


def run_differential(seed, n_ops, check_every, points_per_check, box=2000, reach=80):
    rng = random.Random(seed)
    rs = RayShooter()
    live: list = []
    for step in range(n_ops):
        if live and (rng.random() < 0.5 or len(live) > 300):
            i = rng.randrange(len(live))
            handle = live.pop(i)
            rs.delete(handle)
        else:
            cand = random_segment(rng, box, reach)
            if cand is None or any(
                cand == h.segment or segments_interact(cand, h.segment) for h in live
            ):
                continue
            live.append(rs.insert(cand))
        if step % check_every == 0:
            segs = [h.segment for h in live]
            for _ in range(points_per_check):
                p = Point(rng.randint(-10, box + 10), rng.randint(-10, box + 10))
                assert rs.shoot(p) == brute_shoot(segs, p), (seed, step, p)
                got = rs.find_containing(p)
                want = next(
                    (s for s in segs if s.a < p < s.b
                     and brute_on_line(s, p)), None,
                )
                assert got == want, (seed, step, p)
    return rs


def brute_on_line(s, p):
    from planeloc.geom import orient_sign

    return orient_sign(s.a, s.b, p) == 0


def test_randomized_differential_small():
    run_differential(seed=7, n_ops=4000, check_every=50, points_per_check=12)


def test_randomized_differential_dense_verticals():
    # Force many vertical and shared-endpoint segments through a narrow band.
    rng = random.Random(13)
    rs = RayShooter()
    live = []
    for step in range(2500):
        if live and rng.random() < 0.45:
            rs.delete(live.pop(rng.randrange(len(live))))
        else:
            x = rng.randint(0, 40)
            y = rng.randint(0, 40)
            if rng.random() < 0.4:
                cand = Segment(Point(x, y), Point(x, y + rng.randint(1, 6)))
            else:
                cand = Segment(Point(x, y), Point(x + rng.randint(1, 6), y + rng.randint(-4, 4)))
            if any(cand == h.segment or segments_interact(cand, h.segment) for h in live):
                continue
            live.append(rs.insert(cand))
        if step % 40 == 0:
            segs = [h.segment for h in live]
            for _ in range(15):
                p = Point(rng.randint(-2, 44), rng.randint(-2, 44))
                assert rs.shoot(p) == brute_shoot(segs, p), (step, p)


def test_shear_consistency_on_vertex_queries():
    rs = RayShooter()
    segs = [S(0, 0, 4, 0), S(4, 0, 4, 4), S(4, 4, 0, 4), S(0, 4, 0, 0), S(0, 0, 4, 4)]
    for s in segs:
        rs.insert(s)
    for p in (Point(0, 0), Point(4, 0), Point(2, 2), Point(2, 0)):
        assert rs.shoot(p) == brute_shoot(segs, p)
