"""Fully dynamic vertical ray shooting over interior-disjoint segments.

An interval tree over sheared x-spans: each skeleton node holds the
segments whose half-open span [a, b) contains its discriminant point, in a
treap ordered by height at the discriminant.  Treap nodes carry subtree
minima/maxima of the endpoints, so a query can binary-search for the first
segment above the query point among those whose span reaches it.

Documented costs: updates and queries run in O(log^2 n) amortized-expected
time for non-adversarial inputs (a periodic global rebuild keeps the
skeleton balanced); the reconstruction-period formula upstream consumes
U(n) = Q(n), so the period evaluates to sqrt(n).
"""

from __future__ import annotations

import random
from typing import Optional

from .geom import (
    Point, Segment, lower_hit, orient_sign, slope_cmp, strictly_above,
)
from .instrument import GLOBAL
from .results import ValidationFailure

_prio = random.Random(0xA11CE)


def _cmp_at(s1: Segment, s2: Segment, d: Point) -> int:
    """Order two segments whose spans contain d by height on the sheared
    vertical line through d; ties only at shared endpoints, broken by slope
    so that the order matches heights just right (diverging) or just left
    (converging) of the shared point."""
    if s1 is s2 or s1 == s2:
        return 0
    on1 = orient_sign(s1.a, s1.b, d) == 0
    on2 = orient_sign(s2.a, s2.b, d) == 0
    h1 = d.y if on1 else s1.y_at(d.x)
    h2 = d.y if on2 else s2.y_at(d.x)
    if h1 != h2:
        return -1 if h1 < h2 else 1
    sc = slope_cmp(s1, s2)
    assert sc != 0, f"indistinguishable segments {s1} vs {s2}"
    return sc if d.y >= h1 else -sc


class _TNode:
    __slots__ = ("seg", "prio", "left", "right", "min_a", "max_b")

    def __init__(self, seg: Segment):
        self.seg = seg
        self.prio = _prio.random()
        self.left: Optional[_TNode] = None
        self.right: Optional[_TNode] = None
        self.min_a = seg.a
        self.max_b = seg.b

    def pull(self) -> None:
        min_a, max_b = self.seg.a, self.seg.b
        if self.left is not None:
            if self.left.min_a < min_a:
                min_a = self.left.min_a
            if self.left.max_b > max_b:
                max_b = self.left.max_b
        if self.right is not None:
            if self.right.min_a < min_a:
                min_a = self.right.min_a
            if self.right.max_b > max_b:
                max_b = self.right.max_b
        self.min_a = min_a
        self.max_b = max_b


def _t_merge(a: Optional[_TNode], b: Optional[_TNode]) -> Optional[_TNode]:
    if a is None:
        return b
    if b is None:
        return a
    if a.prio > b.prio:
        a.right = _t_merge(a.right, b)
        a.pull()
        return a
    b.left = _t_merge(a, b.left)
    b.pull()
    return b


def _t_split(t: Optional[_TNode], seg: Segment, d: Point):
    """Three-way split by comparator: (below seg, the seg node or None, above)."""
    if t is None:
        return None, None, None
    c = _cmp_at(seg, t.seg, d)
    if c == 0:
        l, r = t.left, t.right
        t.left = t.right = None
        t.pull()
        return l, t, r
    if c < 0:
        l, m, r = _t_split(t.left, seg, d)
        t.left = r
        t.pull()
        return l, m, t
    l, m, r = _t_split(t.right, seg, d)
    t.right = l
    t.pull()
    return t, m, r


class _SkelNode:
    __slots__ = ("disc", "tree", "left", "right")

    def __init__(self, disc: Point):
        self.disc = disc
        self.tree: Optional[_TNode] = None
        self.left: Optional[_SkelNode] = None
        self.right: Optional[_SkelNode] = None

    def insert(self, seg: Segment) -> None:
        l, m, r = _t_split(self.tree, seg, self.disc)
        assert m is None, f"duplicate segment {seg}"
        self.tree = _t_merge(_t_merge(l, _TNode(seg)), r)

    def remove(self, seg: Segment) -> None:
        l, m, r = _t_split(self.tree, seg, self.disc)
        assert m is not None and m.seg == seg, f"segment not at node: {seg}"
        self.tree = _t_merge(l, r)

    def first_above(self, p: Point) -> Optional[Segment]:
        """Lowest segment strictly above p among those whose span reaches p."""
        if p < self.disc:
            return _search_left(self.tree, p)
        return _search_right(self.tree, p)

    def containing(self, p: Point) -> Optional[Segment]:
        if p < self.disc:
            return _contain_left(self.tree, p)
        return _contain_right(self.tree, p)


def _search_left(t: Optional[_TNode], p: Point) -> Optional[Segment]:
    # Candidates have a <= p; above-ness is monotone along the height order,
    # so a candidate that is not above p prunes its whole left subtree.
    while t is not None and t.min_a <= p:
        if t.seg.a <= p:
            if strictly_above(t.seg, p):
                r = _search_left(t.left, p)
                return r if r is not None else t.seg
            t = t.right
        else:
            r = _search_left(t.left, p)
            if r is not None:
                return r
            t = t.right
    return None


def _search_right(t: Optional[_TNode], p: Point) -> Optional[Segment]:
    while t is not None and t.max_b > p:
        if t.seg.b > p:
            if strictly_above(t.seg, p):
                r = _search_right(t.left, p)
                return r if r is not None else t.seg
            t = t.right
        else:
            r = _search_right(t.left, p)
            if r is not None:
                return r
            t = t.right
    return None


def _contain_left(t: Optional[_TNode], p: Point) -> Optional[Segment]:
    while t is not None and t.min_a <= p:
        if t.seg.a <= p:
            o = orient_sign(t.seg.a, t.seg.b, p)
            if o == 0:
                return t.seg if t.seg.a < p < t.seg.b else None
            t = t.left if o == -1 else t.right
        else:
            r = _contain_left(t.left, p)
            if r is not None:
                return r
            t = t.right
    return None


def _contain_right(t: Optional[_TNode], p: Point) -> Optional[Segment]:
    while t is not None and t.max_b > p:
        if t.seg.b > p:
            o = orient_sign(t.seg.a, t.seg.b, p)
            if o == 0:
                return t.seg if t.seg.a < p < t.seg.b else None
            t = t.left if o == -1 else t.right
        else:
            r = _contain_right(t.left, p)
            if r is not None:
                return r
            t = t.right
    return None


class RSHandle:
    __slots__ = ("segment", "alive")

    def __init__(self, segment: Segment):
        self.segment = segment
        self.alive = True


class RayShooter:
    """Maintains a dynamic set of interior-disjoint segments and answers
    first-segment-above queries under the symbolic shear."""

    def __init__(self):
        self.root: Optional[_SkelNode] = None
        self._where: dict[tuple, _SkelNode] = {}
        self._handles: dict[tuple, RSHandle] = {}
        self._ops = 0
        self._rebuild_at = 64

    def __len__(self) -> int:
        return len(self._where)

    def segments(self) -> list[Segment]:
        return [h.segment for h in self._handles.values()]

    def insert(self, seg: Segment) -> RSHandle:
        if seg.key() in self._where:
            raise ValidationFailure(f"duplicate segment {seg}")
        self._place(seg)
        handle = RSHandle(seg)
        self._handles[seg.key()] = handle
        self._maybe_rebuild()
        return handle

    def _place(self, seg: Segment) -> None:
        if self.root is None:
            self.root = _SkelNode(seg.a)
        node = self.root
        while True:
            if seg.b <= node.disc:
                if node.left is None:
                    node.left = _SkelNode(seg.a)
                node = node.left
            elif seg.a > node.disc:
                if node.right is None:
                    node.right = _SkelNode(seg.a)
                node = node.right
            else:
                node.insert(seg)
                self._where[seg.key()] = node
                return

    def delete(self, handle: RSHandle) -> None:
        if not handle.alive:
            raise ValidationFailure(f"stale handle for {handle.segment}")
        seg = handle.segment
        node = self._where.pop(seg.key())
        node.remove(seg)
        del self._handles[seg.key()]
        handle.alive = False
        self._maybe_rebuild()

    def _maybe_rebuild(self) -> None:
        self._ops += 1
        if self._ops < self._rebuild_at:
            return
        segs = self.segments()
        self.root = self._build(segs)
        self._ops = 0
        self._rebuild_at = max(64, len(segs))

    def _build(self, segs: list[Segment]) -> Optional[_SkelNode]:
        if not segs:
            return None
        # Lower median of distinct endpoints: both recursion sides shrink.
        uniq = sorted({p for s in segs for p in (s.a, s.b)})
        d = uniq[(len(uniq) - 1) // 2]
        node = _SkelNode(d)
        left, right = [], []
        for s in segs:
            if s.a <= d < s.b:
                node.insert(s)
                self._where[s.key()] = node
            elif s.b <= d:
                left.append(s)
            else:
                right.append(s)
        node.left = self._build(left)
        node.right = self._build(right)
        return node

    def shoot(self, p: Point) -> Optional[Segment]:
        """The stored segment first hit by the sheared upward ray from p, or
        None; a segment containing p is not above it."""
        GLOBAL.bump("shoot_calls")
        best: Optional[Segment] = None
        node = self.root
        while node is not None:
            cand = node.first_above(p)
            if cand is not None:
                best = cand if best is None else lower_hit(best, cand, p)
            node = node.left if p < node.disc else node.right
        return best

    def shoot_handle(self, p: Point) -> Optional[RSHandle]:
        seg = self.shoot(p)
        return None if seg is None else self._handles[seg.key()]

    def find_containing(self, p: Point) -> Optional[Segment]:
        """The stored segment whose open interior contains p, if any."""
        node = self.root
        while node is not None:
            cand = node.containing(p)
            if cand is not None:
                return cand
            node = node.left if p < node.disc else node.right
        return None

    def cell_count(self) -> int:
        count = 0
        stack = [self.root]
        while stack:
            n = stack.pop()
            if n is None:
                continue
            count += 1
            stack.append(n.left)
            stack.append(n.right)
        return count + 2 * len(self._where)
