"""Disjoint sets over face labels 1..m: union by rank, path compression.

The root's label names the merged set.  ``find_readonly`` is a
non-compressing variant for shared-read phases; a traversal counter backs
the amortized-cost checks.
"""

from __future__ import annotations

from .instrument import GLOBAL


class DisjointSets:
    __slots__ = ("parent", "rank", "count")

    def __init__(self, m: int):
        if m < 0:
            raise ValueError("negative element count")
        # Index 0 unused; labels are 1..m.
        self.parent = list(range(m + 1))
        self.rank = [0] * (m + 1)
        self.count = m

    def __len__(self) -> int:
        return len(self.parent) - 1

    def _check(self, label: int) -> None:
        if not 1 <= label < len(self.parent):
            raise IndexError(f"label {label} out of range 1..{len(self.parent) - 1}")

    def find(self, label: int) -> int:
        self._check(label)
        parent = self.parent
        root = label
        while parent[root] != root:
            GLOBAL.bump("uf_links")
            root = parent[root]
        while parent[label] != root:
            parent[label], label = root, parent[label]
        return root

    def find_readonly(self, label: int) -> int:
        self._check(label)
        parent = self.parent
        while parent[label] != label:
            GLOBAL.bump("uf_links")
            label = parent[label]
        return label

    def same(self, a: int, b: int) -> bool:
        return self.find(a) == self.find(b)

    def union(self, a: int, b: int) -> int:
        """Merge the sets of a and b; returns the surviving root label."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return ra
        if self.rank[ra] < self.rank[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        if self.rank[ra] == self.rank[rb]:
            self.rank[ra] += 1
        self.count -= 1
        return ra

    def roots(self) -> list[int]:
        return [i for i in range(1, len(self.parent)) if self.parent[i] == i]
