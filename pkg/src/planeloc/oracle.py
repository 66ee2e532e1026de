"""Brute-force reference implementations for differential testing.

The oracle mirrors the sequence of updates applied to the fast structure
and recomputes the complete subdivision from scratch on demand; nothing
here shares code paths with the clever data structures beyond the exact
predicates themselves.
"""

from __future__ import annotations

from typing import Iterable, Optional

from .geom import Point, Segment, lower_hit, point_in_open_segment, segments_interact, shoot_hits
from .results import InFace, OnBoundary, ValidationFailure
from .subdivision import Snapshot, build, locate_naive


def brute_shoot(segments: Iterable[Segment], p: Point) -> Optional[Segment]:
    """Linear-scan first-segment-above under the same shear conventions."""
    best: Optional[Segment] = None
    for s in segments:
        if shoot_hits(s, p):
            best = s if best is None else lower_hit(best, s, p)
    return best


class Oracle:
    """Mirror of the live edge set with naive same-face answers."""

    def __init__(self):
        self.edges: dict[tuple, Segment] = {}
        self._snap: Optional[Snapshot] = None

    def insert(self, seg: Segment) -> None:
        if seg.key() in self.edges:
            raise ValidationFailure(f"duplicate edge {seg}")
        for other in self.edges.values():
            if segments_interact(seg, other):
                raise ValidationFailure(f"edge {seg} interacts with {other}")
            if point_in_open_segment(seg.a, other) or point_in_open_segment(seg.b, other):
                raise ValidationFailure(f"endpoint of {seg} lies on {other}")
        self.edges[seg.key()] = seg
        self._snap = None

    def delete(self, seg: Segment) -> None:
        if seg.key() not in self.edges:
            raise ValidationFailure(f"unknown edge {seg}")
        del self.edges[seg.key()]
        self._snap = None

    def snapshot(self) -> Snapshot:
        if self._snap is None:
            self._snap = build(list(self.edges.values()), validate=False)
        return self._snap

    def locate(self, p: Point):
        return locate_naive(self.snapshot(), p)

    def face_of(self, p: Point) -> int:
        res = self.locate(p)
        if not isinstance(res, InFace):
            raise OnBoundary(f"{p} lies on the subdivision")
        return res.name

    def same_face(self, p: Point, q: Point) -> bool:
        return self.face_of(p) == self.face_of(q)
