"""Concatenable queues: sequences with O(log n) insert, delete, split,
concatenate, and handle-to-root navigation.

Implemented as treaps with parent pointers; the treap root doubles as the
queue root, and the queue object carries an opaque annotation slot for
callers (cross-links between boundary components live there).

Two internal augmentations are maintained besides subtree sizes:

* a per-element "marked" bit with subtree counts, so callers can walk just
  the marked elements of a sequence in O(log n) per element (the old-edge
  traversal along a boundary component needs this);
* a per-element key with subtree maximum, so the maximal element of a
  queue is available in O(1) (topmost vertex of a boundary component).

Cyclic sequences are stored linearly with an arbitrary cut point; callers
rotate via split + concatenate.
"""

from __future__ import annotations

import random
from typing import Any, Iterator, Optional

from .instrument import GLOBAL

_rng = random.Random(0x5EED)


class StaleHandle(ValueError):
    pass


class _Node:
    __slots__ = (
        "value", "key", "prio", "left", "right", "parent",
        "size", "marked", "mcount", "maxkey", "queue", "dead",
    )

    def __init__(self, value, key, marked):
        self.value = value
        self.key = key
        self.prio = _rng.random()
        self.left: Optional[_Node] = None
        self.right: Optional[_Node] = None
        self.parent: Optional[_Node] = None
        self.size = 1
        self.marked = marked
        self.mcount = 1 if marked else 0
        self.maxkey = key
        self.queue: Optional[CQueue] = None
        self.dead = False

    def _pull(self) -> None:
        size = 1
        mcount = 1 if self.marked else 0
        maxkey = self.key
        l, r = self.left, self.right
        if l is not None:
            size += l.size
            mcount += l.mcount
            if l.maxkey is not None and (maxkey is None or l.maxkey > maxkey):
                maxkey = l.maxkey
        if r is not None:
            size += r.size
            mcount += r.mcount
            if r.maxkey is not None and (maxkey is None or r.maxkey > maxkey):
                maxkey = r.maxkey
        self.size = size
        self.mcount = mcount
        self.maxkey = maxkey


def _join(a: Optional[_Node], b: Optional[_Node]) -> Optional[_Node]:
    if a is None:
        return b
    if b is None:
        return a
    GLOBAL.bump("cqueue_nodes")
    if a.prio > b.prio:
        r = _join(a.right, b)
        a.right = r
        if r is not None:
            r.parent = a
        a._pull()
        a.parent = None
        return a
    l = _join(a, b.left)
    b.left = l
    if l is not None:
        l.parent = b
    b._pull()
    b.parent = None
    return b


def _split(t: Optional[_Node], k: int) -> tuple[Optional[_Node], Optional[_Node]]:
    """Split subtree t into first k elements and the rest."""
    if t is None:
        return None, None
    GLOBAL.bump("cqueue_nodes")
    lsize = t.left.size if t.left is not None else 0
    if k <= lsize:
        a, b = _split(t.left, k)
        t.left = b
        if b is not None:
            b.parent = t
        t._pull()
        t.parent = None
        if a is not None:
            a.parent = None
        return a, t
    a, b = _split(t.right, k - lsize - 1)
    t.right = a
    if a is not None:
        a.parent = t
    t._pull()
    t.parent = None
    if b is not None:
        b.parent = None
    return t, b


def _find_root(node: _Node) -> _Node:
    while node.parent is not None:
        GLOBAL.bump("cqueue_nodes")
        node = node.parent
    return node


def _rank(node: _Node) -> int:
    """1-based in-order position of node in its tree."""
    r = (node.left.size if node.left is not None else 0) + 1
    cur = node
    while cur.parent is not None:
        GLOBAL.bump("cqueue_nodes")
        p = cur.parent
        if cur is p.right:
            r += (p.left.size if p.left is not None else 0) + 1
        cur = p
    return r


class CQueue:
    """A concatenable queue.  Element handles are returned by insertion and
    stay valid across splits/concatenations until deleted."""

    __slots__ = ("root", "note")

    def __init__(self):
        self.root: Optional[_Node] = None
        self.note: Any = None

    @classmethod
    def _wrap(cls, root: Optional[_Node]) -> "CQueue":
        q = cls()
        q._set_root(root)
        return q

    def _set_root(self, root: Optional[_Node]) -> None:
        self.root = root
        if root is not None:
            root.queue = self

    def __len__(self) -> int:
        return self.root.size if self.root is not None else 0

    def __iter__(self) -> Iterator[_Node]:
        stack: list[_Node] = []
        cur = self.root
        while stack or cur is not None:
            while cur is not None:
                stack.append(cur)
                cur = cur.left
            cur = stack.pop()
            yield cur
            cur = cur.right

    def values(self) -> list:
        return [h.value for h in self]

    # -- mutation ---------------------------------------------------------

    def _check(self, handle: _Node) -> None:
        if handle.dead:
            raise StaleHandle("element was deleted")
        if _find_root(handle) is not self.root:
            raise StaleHandle("handle belongs to a different queue")

    def push_back(self, value, key=None, marked=False) -> _Node:
        GLOBAL.bump("cqueue_ops")
        node = _Node(value, key, marked)
        self._set_root(_join(self.root, node))
        return node

    def push_front(self, value, key=None, marked=False) -> _Node:
        GLOBAL.bump("cqueue_ops")
        node = _Node(value, key, marked)
        self._set_root(_join(node, self.root))
        return node

    def insert_before(self, handle: _Node, value, key=None, marked=False) -> _Node:
        GLOBAL.bump("cqueue_ops")
        self._check(handle)
        k = _rank(handle) - 1
        node = _Node(value, key, marked)
        a, b = _split(self.root, k)
        self._set_root(_join(_join(a, node), b))
        return node

    def insert_after(self, handle: _Node, value, key=None, marked=False) -> _Node:
        GLOBAL.bump("cqueue_ops")
        self._check(handle)
        k = _rank(handle)
        node = _Node(value, key, marked)
        a, b = _split(self.root, k)
        self._set_root(_join(_join(a, node), b))
        return node

    def delete(self, handle: _Node) -> None:
        GLOBAL.bump("cqueue_ops")
        self._check(handle)
        k = _rank(handle)
        a, b = _split(self.root, k)
        a, mid = _split(a, k - 1)
        assert mid is handle
        handle.dead = True
        handle.queue = None
        self._set_root(_join(a, b))

    def split_after(self, handle: _Node) -> tuple["CQueue", "CQueue"]:
        """Split into (prefix ending at handle, remainder); self is consumed."""
        GLOBAL.bump("cqueue_ops")
        self._check(handle)
        k = _rank(handle)
        a, b = _split(self.root, k)
        self.root = None
        return CQueue._wrap(a), CQueue._wrap(b)

    def split_before(self, handle: _Node) -> tuple["CQueue", "CQueue"]:
        GLOBAL.bump("cqueue_ops")
        self._check(handle)
        k = _rank(handle) - 1
        a, b = _split(self.root, k)
        self.root = None
        return CQueue._wrap(a), CQueue._wrap(b)

    def set_marked(self, handle: _Node, flag: bool) -> None:
        if handle.dead:
            raise StaleHandle("element was deleted")
        if handle.marked == flag:
            return
        GLOBAL.bump("cqueue_ops")
        handle.marked = flag
        cur: Optional[_Node] = handle
        while cur is not None:
            GLOBAL.bump("cqueue_nodes")
            cur._pull()
            cur = cur.parent

    # -- navigation -------------------------------------------------------

    def first(self) -> Optional[_Node]:
        cur = self.root
        if cur is None:
            return None
        while cur.left is not None:
            cur = cur.left
        return cur

    def last(self) -> Optional[_Node]:
        cur = self.root
        if cur is None:
            return None
        while cur.right is not None:
            cur = cur.right
        return cur

    def marked_count(self) -> int:
        return self.root.mcount if self.root is not None else 0

    def max_key(self):
        """Largest element key in the queue, or None."""
        return self.root.maxkey if self.root is not None else None

    def iter_marked(self) -> Iterator[_Node]:
        def walk(t: Optional[_Node]):
            if t is None or t.mcount == 0:
                return
            yield from walk(t.left)
            if t.marked:
                yield t
            yield from walk(t.right)

        yield from walk(self.root)


def concatenate(q1: CQueue, q2: CQueue) -> CQueue:
    """q1's sequence followed by q2's; both inputs are consumed."""
    if q1 is q2:
        raise ValueError("cannot concatenate a queue with itself")
    GLOBAL.bump("cqueue_ops")
    root = _join(q1.root, q2.root)
    q1.root = None
    q2.root = None
    return CQueue._wrap(root)


def queue_of(handle: _Node) -> CQueue:
    """The queue currently owning a handle, via the parent chain."""
    if handle.dead:
        raise StaleHandle("element was deleted")
    root = _find_root(handle)
    assert root.queue is not None
    return root.queue


def successor(handle: _Node) -> Optional[_Node]:
    if handle.right is not None:
        cur = handle.right
        while cur.left is not None:
            cur = cur.left
        return cur
    cur = handle
    while cur.parent is not None and cur is cur.parent.right:
        cur = cur.parent
    return cur.parent


def predecessor(handle: _Node) -> Optional[_Node]:
    if handle.left is not None:
        cur = handle.left
        while cur.right is not None:
            cur = cur.right
        return cur
    cur = handle
    while cur.parent is not None and cur is cur.parent.left:
        cur = cur.parent
    return cur.parent


def cyclic_successor(handle: _Node) -> _Node:
    nxt = successor(handle)
    if nxt is None:
        q = queue_of(handle)
        nxt = q.first()
        assert nxt is not None
    return nxt


def cyclic_predecessor(handle: _Node) -> _Node:
    prv = predecessor(handle)
    if prv is None:
        q = queue_of(handle)
        prv = q.last()
        assert prv is not None
    return prv


def rotate_to_tail(q: CQueue, handle: _Node) -> CQueue:
    """Rotate a cyclic sequence so that handle becomes the last element."""
    if q.last() is handle:
        return q
    a, b = q.split_after(handle)
    return concatenate(b, a)


def rotate_to_head(q: CQueue, handle: _Node) -> CQueue:
    if q.first() is handle:
        return q
    a, b = q.split_before(handle)
    return concatenate(b, a)
