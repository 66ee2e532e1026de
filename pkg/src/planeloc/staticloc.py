"""Static point location over a snapshot: a randomized incremental
trapezoidal map with expected O(n) size and O(log n) query time.

All x-comparisons are sheared (lexicographic on points), so no two distinct
endpoints share an abscissa and the classic shared-x degeneracies
disappear.  Neighbor pointers follow the segment-sharing convention:
``ur``/``lr`` are the right neighbors sharing the trapezoid's top/bottom
segment (``ul``/``ll`` mirrored).  Sharing is symmetric, which keeps the
pointer surgery during insertion mechanical.
"""

from __future__ import annotations

import random
from typing import Optional

from .geom import Point, Segment, orient_sign, slope_cmp
from .results import InFace, OnEdge, OnVertex
from .subdivision import Snapshot

X, Y, LEAF = 0, 1, 2


class _Node:
    """DAG node, morphed in place when a leaf is replaced; parents keep
    their references so no parent lists are needed."""

    __slots__ = ("kind", "point", "segment", "left", "right", "trap")

    def __init__(self):
        self.kind = LEAF
        self.point: Optional[Point] = None
        self.segment: Optional[Segment] = None
        self.left: Optional["_Node"] = None
        self.right: Optional["_Node"] = None
        self.trap: Optional["_Trap"] = None

    def morph(self, other: "_Node") -> None:
        self.kind = other.kind
        self.point = other.point
        self.segment = other.segment
        self.left = other.left
        self.right = other.right
        self.trap = other.trap


class _Trap:
    __slots__ = ("top", "bottom", "leftp", "rightp", "ul", "ll", "ur", "lr", "leaf")

    def __init__(self, top, bottom, leftp, rightp):
        self.top: Optional[Segment] = top          # None = open above
        self.bottom: Optional[Segment] = bottom    # None = open below
        self.leftp: Optional[Point] = leftp        # None = -infinity
        self.rightp: Optional[Point] = rightp      # None = +infinity
        self.ul: Optional[_Trap] = None
        self.ll: Optional[_Trap] = None
        self.ur: Optional[_Trap] = None
        self.lr: Optional[_Trap] = None
        self.leaf = _Node()
        self.leaf.trap = self

    def __repr__(self) -> str:
        return (
            f"Trap(top={self.top}, bottom={self.bottom}, "
            f"l={self.leftp}, r={self.rightp})"
        )


class StaticLocator:
    """Queries answer OnVertex / OnEdge relative to the snapshot's edge set,
    otherwise the name of the containing face."""

    def __init__(self, snapshot: Snapshot, seed: int = 0):
        self.snapshot = snapshot
        world = _Trap(None, None, None, None)
        self.root = world.leaf
        segs = list(snapshot.segments)
        random.Random(seed).shuffle(segs)
        for s in segs:
            self._insert(s)

    # -- construction ------------------------------------------------------

    def _locate_endpoint(self, p: Point, s: Segment) -> _Trap:
        """Trap holding the left endpoint of the segment being inserted.
        Ties at existing vertices resolve rightward; shared-endpoint y-node
        tests resolve by slope."""
        node = self.root
        while node.kind != LEAF:
            if node.kind == X:
                node = node.right if p >= node.point else node.left
            else:
                g = node.segment
                o = orient_sign(g.a, g.b, p)
                if o == 0:
                    assert p == g.a, "insertion endpoint on an edge interior"
                    o = slope_cmp(s, g)
                    assert o != 0, "overlapping collinear edges"
                node = node.left if o > 0 else node.right
        return node.trap

    def _follow(self, s: Segment) -> list[_Trap]:
        t = self._locate_endpoint(s.a, s)
        traps = [t]
        while t.rightp is not None and t.rightp < s.b:
            t = t.ur if orient_sign(s.a, s.b, t.rightp) == -1 else t.lr
            assert t is not None, "walk fell off the map"
            traps.append(t)
        return traps

    def _insert(self, s: Segment) -> None:
        traps = self._follow(s)
        chain = {id(t) for t in traps}
        a, b = s.a, s.b
        t0, tk = traps[0], traps[-1]
        A = _Trap(t0.top, t0.bottom, t0.leftp, a) if (t0.leftp is None or t0.leftp < a) else None
        B = _Trap(tk.top, tk.bottom, b, tk.rightp) if (tk.rightp is None or b < tk.rightp) else None

        # Build the chains of upper/lower pieces with merging.  A wall point
        # below s stops blocking the region above s, so the upper piece
        # continues and the lower one splits there (and vice versa).
        upper_of: list[_Trap] = []
        lower_of: list[_Trap] = []
        u = _Trap(t0.top, s, a, None)
        l = _Trap(s, t0.bottom, a, None)
        upper_of.append(u)
        lower_of.append(l)
        for i in range(1, len(traps)):
            prev, cur = traps[i - 1], traps[i]
            w = prev.rightp
            if orient_sign(a, b, w) == -1:
                prev_l = l
                prev_l.rightp = w
                l = _Trap(s, cur.bottom, w, None)
                l.ul = prev_l
                l.ll = prev_l if cur.ll is prev else cur.ll
                prev_l.ur = l
                prev_l.lr = l if prev.lr is cur else prev.lr
            else:
                prev_u = u
                prev_u.rightp = w
                u = _Trap(cur.top, s, w, None)
                u.ll = prev_u
                u.ul = prev_u if cur.ul is prev else cur.ul
                prev_u.lr = u
                prev_u.ur = u if prev.ur is cur else prev.ur
            upper_of.append(u)
            lower_of.append(l)
        u0, l0 = upper_of[0], lower_of[0]
        uk, lk = upper_of[-1], lower_of[-1]
        uk.rightp = b
        lk.rightp = b

        # End walls.
        if A is not None:
            A.ul, A.ll = t0.ul, t0.ll
            A.ur, A.lr = u0, l0
            u0.ul = A
            l0.ll = A
        else:
            u0.ul = t0.ul
            l0.ll = t0.ll
        u0.ll = None
        l0.ul = None
        if B is not None:
            B.ur, B.lr = tk.ur, tk.lr
            B.ul, B.ll = uk, lk
            uk.ur = B
            lk.lr = B
        else:
            uk.ur = tk.ur
            lk.lr = tk.lr
        uk.lr = None
        lk.ur = None

        # Repoint untouched neighbors at the pieces sharing their segment.
        for i, t in enumerate(traps):
            lt = A if (i == 0 and A is not None) else upper_of[i]
            lb = A if (i == 0 and A is not None) else lower_of[i]
            rt = B if (i == len(traps) - 1 and B is not None) else upper_of[i]
            rb = B if (i == len(traps) - 1 and B is not None) else lower_of[i]
            for n, top_piece, bottom_piece in (
                (t.ul, lt, lb), (t.ll, lt, lb), (t.ur, rt, rb), (t.lr, rt, rb),
            ):
                if n is None or id(n) in chain:
                    continue
                if n.ur is t:
                    n.ur = top_piece
                if n.lr is t:
                    n.lr = bottom_piece
                if n.ul is t:
                    n.ul = top_piece
                if n.ll is t:
                    n.ll = bottom_piece

        # DAG surgery: one y-node per replaced trap; merged pieces share
        # their leaf across subtrees.
        for i, t in enumerate(traps):
            sub = _Node()
            sub.kind = Y
            sub.segment = s
            sub.left = upper_of[i].leaf
            sub.right = lower_of[i].leaf
            if i == len(traps) - 1 and B is not None:
                x = _Node()
                x.kind = X
                x.point = b
                x.left, x.right = sub, B.leaf
                sub = x
            if i == 0 and A is not None:
                x = _Node()
                x.kind = X
                x.point = a
                x.left, x.right = A.leaf, sub
                sub = x
            t.leaf.morph(sub)
            t.leaf = None  # type: ignore[assignment]

    # -- queries -----------------------------------------------------------

    def locate_raw(self, p: Point):
        node = self.root
        while node.kind != LEAF:
            if node.kind == X:
                if p == node.point:
                    return OnVertex(p)
                node = node.right if p > node.point else node.left
            else:
                g = node.segment
                o = orient_sign(g.a, g.b, p)
                if o == 0:
                    if p == g.a or p == g.b:
                        return OnVertex(p)
                    assert g.a < p < g.b, "query off-span hit a segment line"
                    return OnEdge(g)
                node = node.left if o > 0 else node.right
        return node.trap

    def query(self, p: Point):
        res = self.locate_raw(p)
        if isinstance(res, (OnVertex, OnEdge)):
            return res
        if res.bottom is None:
            return InFace(1)
        return InFace(self.snapshot.face_above_segment(res.bottom).name)

    # -- introspection -----------------------------------------------------

    def node_count(self) -> int:
        visited: set[int] = set()
        stack = [self.root]
        while stack:
            n = stack.pop()
            if id(n) in visited:
                continue
            visited.add(id(n))
            if n.kind != LEAF:
                stack.append(n.left)
                stack.append(n.right)
        return len(visited)


def build_static(snapshot: Snapshot, seed: int = 0) -> StaticLocator:
    return StaticLocator(snapshot, seed)


def query_static(locator: StaticLocator, p: Point):
    return locator.query(p)
