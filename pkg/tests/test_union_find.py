import random

import pytest

from planeloc.dsets import DisjointSets
from planeloc.instrument import GLOBAL


def test_make_sets():
    d = DisjointSets(3)
    assert [d.find(i) for i in (1, 2, 3)] == [1, 2, 3]
    assert len(DisjointSets(0)) == 0
    assert DisjointSets(1).find(1) == 1


def test_find_and_union():
    d = DisjointSets(3)
    d.union(1, 2)
    assert d.find(1) == d.find(2)
    d.union(2, 3)
    assert d.find(3) == d.find(1)


def test_union_counting():
    d = DisjointSets(5)
    assert d.count == 5
    d.union(1, 1)
    assert d.count == 5
    d.union(1, 2)
    assert d.count == 4
    assert len(d.roots()) == 4


def test_union_returns_root_name():
    d = DisjointSets(4)
    r = d.union(1, 2)
    assert r == d.find(1) == d.find(2)


def test_out_of_range():
    d = DisjointSets(2)
    with pytest.raises(IndexError):
        d.find(0)
    with pytest.raises(IndexError):
        d.union(1, 3)


def test_readonly_find_does_not_compress():
    d = DisjointSets(3)
    d.union(1, 2)
    d.union(2, 3)
    parents = list(d.parent)
    d.find_readonly(3)
    assert d.parent == parents


def test_against_naive_label_model():
    rng = random.Random(2024)
    m = 10_000
    d = DisjointSets(m)
    labels = list(range(m + 1))
    for _ in range(100_000):
        a = rng.randint(1, m)
        b = rng.randint(1, m)
        if rng.random() < 0.5:
            assert (d.find(a) == d.find(b)) == (labels[a] == labels[b])
        else:
            d.union(a, b)
            la, lb = labels[a], labels[b]
            if la != lb:
                for i in range(1, m + 1):
                    if labels[i] == lb:
                        labels[i] = la


def test_amortized_traversals_near_constant():
    rng = random.Random(5)
    m = 10_000
    d = DisjointSets(m)
    before = GLOBAL.get("uf_links")
    ops = 100_000
    for _ in range(ops):
        a, b = rng.randint(1, m), rng.randint(1, m)
        if rng.random() < 0.4:
            d.union(a, b)
        else:
            d.find(a)
    traversals = GLOBAL.get("uf_links") - before
    assert traversals <= 4 * ops, traversals / ops
