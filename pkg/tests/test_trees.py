import math
import random

import pytest

from quiltops.trees import Tree, TreeInvalid, enumerate_trees, parse_tree


def catalan(n):
    return math.comb(2 * n, n) // (n + 1)


def test_parse_and_str_roundtrip():
    for text in ["1", "1(2)", "2(1)", "1(3,2)", "1(2(4),3)", "3(2,1)"]:
        t = parse_tree(text)
        assert str(t) == text
        assert parse_tree(str(t)) == t


def test_invalid_trees():
    with pytest.raises(TreeInvalid):
        Tree((0, 0, 0), ((), (), ()))       # two roots
    with pytest.raises(TreeInvalid):
        Tree((0, 2, 1), ((), (2,), (1,)))   # cycle
    with pytest.raises(TreeInvalid):
        Tree((0, 0, 1), ((), (2, 2), ()))   # duplicated child
    with pytest.raises(TreeInvalid):
        parse_tree("1(3)")                  # labels not 1..n


def test_orders():
    t = parse_tree("1(2(4),3)")
    assert t.root == 1
    assert t.le(1, 4) and t.lt(2, 4) and not t.le(3, 4)
    assert t.left_of(4, 3) and not t.left_of(3, 4)
    assert not t.left_of(2, 4)  # comparable pair
    assert t.leaves() == [4, 3]
    # five-way trichotomy: exactly one of =, <, >, left, right
    for u in range(1, 5):
        for v in range(1, 5):
            rels = [u == v, t.lt(u, v), t.lt(v, u),
                    t.left_of(u, v), t.left_of(v, u)]
            assert sum(rels) == 1


def test_corner_word_examples():
    assert parse_tree("1").corner_word() == (1,)
    assert parse_tree("1(2)").corner_word() == (1, 2, 1)
    assert parse_tree("1(2,3)").corner_word() == (1, 2, 1, 3, 1)
    t = parse_tree("1(3,2)")
    assert len(t.corner_word()) == 2 * t.n - 1


def test_corner_word_properties():
    # nesting, containment and order properties of the corner reading
    for t in enumerate_trees(4):
        cw = t.corner_word()
        assert len(cw) == t.n + len(t.edges())
        for (u, v) in t.edges():
            pos_u = [i for i, x in enumerate(cw) if x == u]
            pos_v = [i for i, x in enumerate(cw) if x == v]
            assert pos_u[0] < pos_v[0] and pos_v[-1] < pos_u[-1]
        for u in range(1, t.n + 1):
            for v in range(1, t.n + 1):
                if u == v:
                    continue
                pos_u = [i for i, x in enumerate(cw) if x == u]
                pos_v = [i for i, x in enumerate(cw) if x == v]
                nested = pos_u[0] < pos_v[0] and pos_v[-1] < pos_u[-1]
                assert nested == t.lt(u, v)


def test_corner_words_are_words():
    from quiltops.words import Word
    for n in (1, 2, 3, 4):
        for t in enumerate_trees(n):
            w = Word(t.corner_word(), n)
            assert w.degree == n - 1


def test_enumeration_counts():
    for n in range(1, 6):
        trees = enumerate_trees(n)
        assert len(trees) == math.factorial(n) * catalan(n - 1)
        assert len(set(trees)) == len(trees)


def test_permutation_action():
    random.seed(0)
    trees = enumerate_trees(4)
    for _ in range(100):
        t = random.choice(trees)
        perm = random.sample(range(1, 5), 4)
        sigma = {i + 1: perm[i] for i in range(4)}
        inv = {v: k for k, v in sigma.items()}
        assert t.permute(sigma).permute(inv) == t
    # right action: (t^s)^r == t^(s r)
    for _ in range(50):
        t = random.choice(trees)
        s = dict(zip(range(1, 5), random.sample(range(1, 5), 4)))
        r = dict(zip(range(1, 5), random.sample(range(1, 5), 4)))
        sr = {i: s[r[i]] for i in range(1, 5)}
        assert t.permute(s).permute(r) == t.permute(sr)
