"""From-scratch construction of the full subdivision induced by an
interior-disjoint edge set: half-edges, boundary cycles, outer/inner
classification, face assembly, and a naive point locator.

Used at every reconstruction, by the brute-force oracle, and by invariant
checkers, so clarity beats speed here; an x-interval bucket index keeps the
naive scans tolerable at oracle scale.
"""

from __future__ import annotations

import functools
import math
from typing import Iterable, Optional, Union

from .geom import (
    Point, Segment, angle_cmp, lower_hit, orient_sign,
    point_in_open_segment, segments_interact, shoot_hits, span_contains,
)
from .results import InFace, InvalidSubdivision, OnEdge, OnVertex


class HalfEdge:
    __slots__ = ("origin", "target", "edge", "twin", "next", "cycle", "out_index")

    def __init__(self, origin: Point, target: Point, edge: Segment):
        self.origin = origin
        self.target = target
        self.edge = edge
        self.twin: "HalfEdge" = None  # type: ignore[assignment]
        self.next: "HalfEdge" = None  # type: ignore[assignment]
        self.cycle: Optional["BoundaryCycle"] = None
        self.out_index = 0

    @property
    def is_downward_face(self) -> bool:
        """True when the incident face lies below the edge (lex-backward)."""
        return self.origin > self.target

    def __repr__(self) -> str:
        return f"HalfEdge({self.origin} -> {self.target})"


class BoundaryCycle:
    __slots__ = ("halfedges", "kind", "face", "area2")

    def __init__(self, halfedges: list[HalfEdge]):
        self.halfedges = halfedges
        self.area2 = _signed_area2(h.origin for h in halfedges)
        self.kind = "outer" if self.area2 > 0 else "inner"
        self.face: Optional["Face"] = None
        for h in halfedges:
            h.cycle = self

    def edge_set(self) -> frozenset:
        return frozenset(h.edge.key() for h in self.halfedges)

    def topmost_origin(self) -> Point:
        return max(self.halfedges, key=lambda h: (h.origin.y, h.origin.x)).origin

    def min_origin(self) -> Point:
        return min(h.origin for h in self.halfedges)

    def __repr__(self) -> str:
        return f"BoundaryCycle({self.kind}, {len(self.halfedges)} half-edges)"


class Face:
    __slots__ = ("name", "outer", "inners")

    def __init__(self, name: int, outer: Optional[BoundaryCycle]):
        self.name = name
        self.outer = outer
        self.inners: list[BoundaryCycle] = []

    @property
    def unbounded(self) -> bool:
        return self.outer is None

    def __repr__(self) -> str:
        return f"Face({self.name}, outer={self.outer is not None}, inners={len(self.inners)})"


def _signed_area2(points: Iterable[Point]) -> Union[int, object]:
    pts = list(points)
    total = 0
    for i, p in enumerate(pts):
        q = pts[(i + 1) % len(pts)]
        total += p.x * q.y - q.x * p.y
    return total


class XBuckets:
    """Bucket index over real x-spans; a coarse filter only, every answer is
    re-checked with exact predicates."""

    __slots__ = ("lo", "width", "n", "buckets")

    def __init__(self, segments: Iterable[Segment], per_bucket: float = 1.0):
        segs = list(segments)
        self.buckets: list[list[Segment]] = [[]]
        self.lo = 0.0
        self.width = 1.0
        self.n = 1
        if not segs:
            return
        xs = [float(s.a.x) for s in segs] + [float(s.b.x) for s in segs]
        lo, hi = min(xs), max(xs)
        n = max(1, int(len(segs) / per_bucket))
        if hi <= lo:
            n = 1
        self.lo = lo
        self.n = n
        self.width = (hi - lo) / n if hi > lo else 1.0
        self.buckets = [[] for _ in range(n)]
        for s in segs:
            i0 = self._index(float(s.a.x)) - 1
            i1 = self._index(float(s.b.x)) + 1
            for i in range(max(0, i0), min(n - 1, i1) + 1):
                self.buckets[i].append(s)

    def _index(self, x: float) -> int:
        i = int(math.floor((x - self.lo) / self.width))
        return min(max(i, 0), self.n - 1)

    def candidates(self, x) -> list[Segment]:
        return self.buckets[self._index(float(x))]


class Snapshot:
    """Immutable doubly-connected-edge-list view of an edge set."""

    __slots__ = (
        "segments", "vertices", "out_edges", "halfedges", "cycles",
        "faces", "edge_halfedges", "xindex",
    )

    def __init__(self):
        self.segments: list[Segment] = []
        self.vertices: set[Point] = set()
        self.out_edges: dict[Point, list[HalfEdge]] = {}
        self.halfedges: list[HalfEdge] = []
        self.cycles: list[BoundaryCycle] = []
        self.faces: list[Face] = []
        self.edge_halfedges: dict[tuple, tuple[HalfEdge, HalfEdge]] = {}
        self.xindex: XBuckets = None  # type: ignore[assignment]

    @property
    def unbounded_face(self) -> Face:
        return self.faces[0]

    def face_by_name(self, name: int) -> Face:
        return self.faces[name - 1]

    def halfedge_pair(self, seg: Segment) -> tuple[HalfEdge, HalfEdge]:
        """(forward, backward) half-edges of an edge: forward has origin < target."""
        return self.edge_halfedges[seg.key()]

    def shoot_up(self, p: Point) -> Optional[Segment]:
        """First segment strictly above p under the shear; naive bucket scan."""
        best: Optional[Segment] = None
        for s in self.xindex.candidates(p.x):
            if shoot_hits(s, p):
                best = s if best is None else lower_hit(best, s, p)
        return best

    def face_below_segment(self, seg: Segment) -> Face:
        back = self.edge_halfedges[seg.key()][1]
        face = back.cycle.face
        assert face is not None
        return face

    def face_above_segment(self, seg: Segment) -> Face:
        fwd = self.edge_halfedges[seg.key()][0]
        face = fwd.cycle.face
        assert face is not None
        return face

    def cell_count(self) -> int:
        return len(self.halfedges) * 4 + len(self.vertices) + len(self.cycles) + len(self.faces)


def validate_edges(segments: list[Segment]) -> None:
    """Raise InvalidSubdivision naming an offending pair, if any."""
    index = XBuckets(segments)
    seen: set[int] = set()
    for s in segments:
        i0 = index._index(float(s.a.x))
        i1 = index._index(float(s.b.x))
        checked: set[int] = set()
        for i in range(max(0, i0 - 1), min(index.n - 1, i1 + 1) + 1):
            for t in index.buckets[i]:
                if t is s or id(t) in checked:
                    continue
                checked.add(id(t))
                if id(t) in seen:
                    continue
                if segments_interact(s, t):
                    raise InvalidSubdivision(f"edges interact: {s} and {t}")
        seen.add(id(s))


def build(edges: Iterable[Segment], validate: bool = True) -> Snapshot:
    """Construct the subdivision of a set of pairwise non-interacting edges.

    Faces are named 1..m with the unbounded face first.  May take quadratic
    time in degenerate inputs; it runs only at reconstruction and inside the
    oracle.
    """
    segs = [e if isinstance(e, Segment) else Segment(*e) for e in edges]
    if validate:
        validate_edges(segs)

    snap = Snapshot()
    snap.segments = segs
    snap.xindex = XBuckets(segs)

    out: dict[Point, list[HalfEdge]] = {}
    for s in segs:
        fwd = HalfEdge(s.a, s.b, s)
        bwd = HalfEdge(s.b, s.a, s)
        fwd.twin, bwd.twin = bwd, fwd
        snap.halfedges.extend((fwd, bwd))
        snap.edge_halfedges[s.key()] = (fwd, bwd)
        out.setdefault(s.a, []).append(fwd)
        out.setdefault(s.b, []).append(bwd)

    def _angle(h1: HalfEdge, h2: HalfEdge) -> int:
        return angle_cmp(
            h1.target.x - h1.origin.x, h1.target.y - h1.origin.y,
            h2.target.x - h2.origin.x, h2.target.y - h2.origin.y,
        )

    for v, lst in out.items():
        lst.sort(key=functools.cmp_to_key(_angle))
        for i, h in enumerate(lst):
            h.out_index = i
    snap.out_edges = out
    snap.vertices = set(out.keys())

    # next(h): the CCW-predecessor of twin(h) among the out-edges at h.target.
    for h in snap.halfedges:
        lst = out[h.target]
        h.next = lst[h.twin.out_index - 1]

    seen: set[int] = set()
    for h in snap.halfedges:
        if id(h) in seen:
            continue
        walk = []
        cur = h
        while id(cur) not in seen:
            seen.add(id(cur))
            walk.append(cur)
            cur = cur.next
        snap.cycles.append(BoundaryCycle(walk))

    unbounded = Face(1, None)
    snap.faces.append(unbounded)
    outers = sorted(
        (c for c in snap.cycles if c.kind == "outer"), key=lambda c: c.min_origin()
    )
    for i, c in enumerate(outers):
        f = Face(i + 2, c)
        c.face = f
        snap.faces.append(f)

    # Assign each inner cycle to the face immediately containing it: chase
    # the first edge above its topmost vertex; the face below that edge is
    # the owner.  Chains through other inner cycles resolve iteratively
    # (strictly increasing hit heights, so no loops).
    pending: list[tuple[BoundaryCycle, Optional[Segment]]] = []
    for c in snap.cycles:
        if c.kind == "inner":
            pending.append((c, snap.shoot_up(c.topmost_origin())))

    def owner_of(cycle: BoundaryCycle) -> Face:
        chain = []
        cur = cycle
        while cur.face is None:
            chain.append(cur)
            hit = hits[id(cur)]
            if hit is None:
                face = unbounded
                break
            below = snap.edge_halfedges[hit.key()][1]
            cur = below.cycle
        else:
            face = cur.face
        for c in chain:
            c.face = face
        return face

    hits = {id(c): hit for c, hit in pending}
    for c, _hit in pending:
        face = owner_of(c)
        face.inners.append(c)

    return snap


def encloses(face: Face, arg) -> bool:
    """Whether ``arg`` (a Point or BoundaryCycle) lies in the open region,
    bounded by the face's outer cycle, that contains the face.

    The unbounded face has no outer boundary; by convention it encloses
    everything off its boundary.
    """
    if face.unbounded:
        return True
    outer = face.outer
    assert outer is not None
    if isinstance(arg, BoundaryCycle):
        own = arg.edge_set()
        shared = outer.edge_set()
        if own <= shared:
            return False
        probe_edge = next(
            h.edge for h in arg.halfedges if h.edge.key() not in shared
        )
        arg = probe_edge.midpoint()
    return point_enclosed_by_cycle(outer, arg)


def point_enclosed_by_cycle(cycle: BoundaryCycle, p: Point) -> bool:
    """Crossing-number test of p against a cycle's edge set (exact, sheared).

    Each undirected edge is counted once; points on the boundary report
    False.
    """
    crossings = 0
    for key in cycle.edge_set():
        s = Segment(Point(*key[0]), Point(*key[1]))
        if point_in_open_segment(p, s) or p == s.a or p == s.b:
            return False
        if shoot_hits(s, p):
            crossings += 1
    return crossings % 2 == 1


def locate_naive(snap: Snapshot, p: Point):
    """OnVertex / OnEdge / InFace(name) by scanning the bucket index."""
    if p in snap.vertices:
        return OnVertex(p)
    for s in snap.xindex.candidates(p.x):
        if span_contains(s, p) and orient_sign(s.a, s.b, p) == 0:
            return OnEdge(s)
    hit = snap.shoot_up(p)
    if hit is None:
        return InFace(1)
    return InFace(snap.face_below_segment(hit).name)
