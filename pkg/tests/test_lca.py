"""LcaIndex must agree with the parent walk-up oracle on every node pair.

The index reduces LCA to a range-minimum query over an Euler tour; the
exhaustive sweeps here (all pairs, not just leaf pairs) are the guard
that the acceptance run then repeats at its stated scale.
"""

import numpy as np
import pytest

from mixdist import LcaIndex, build_index, lca_naive

from conftest import make_tree


@pytest.fixture(scope="module")
def small_trees():
    trees = []
    for seed in range(20):
        n = 2 + seed * 3 % 63
        trees.append(make_tree(n, seed=seed))
    trees.append(make_tree(50, seed=91, shape="caterpillar"))
    trees.append(make_tree(64, seed=92, shape="complete"))
    return trees


class TestAgainstWalkUp:
    def test_exhaustive_all_node_pairs(self, small_trees):
        for tree in small_trees:
            index = LcaIndex(tree)
            for u in range(tree.node_count):
                for v in range(u, tree.node_count):
                    assert index.query(u, v) == lca_naive(tree, u, v)

    def test_query_is_symmetric(self, small_trees):
        tree = small_trees[0]
        index = LcaIndex(tree)
        for u in tree.leaf_ids[:10]:
            for v in tree.leaf_ids[-10:]:
                assert index.query(u, v) == index.query(v, u)

    def test_query_many_matches_scalar(self, small_trees):
        for tree in small_trees[:5]:
            index = LcaIndex(tree)
            us, vs = [], []
            for u in range(tree.node_count):
                for v in range(tree.node_count):
                    us.append(u)
                    vs.append(v)
            got = index.query_many(us, vs)
            want = np.array([index.query(u, v) for u, v in zip(us, vs)], dtype=np.int64)
            assert np.array_equal(got, want)


class TestStructure:
    def test_self_query(self, small_trees):
        tree = small_trees[0]
        index = LcaIndex(tree)
        for v in range(tree.node_count):
            assert index.query(v, v) == v

    def test_root_with_anything_is_root(self, small_trees):
        tree = small_trees[1]
        index = LcaIndex(tree)
        for v in range(tree.node_count):
            assert index.query(0, v) == 0

    def test_ancestor_descendant(self):
        tree = make_tree(32, seed=7)
        index = LcaIndex(tree)
        for v in range(1, tree.node_count):
            p = tree.parent[v]
            assert index.query(p, v) == p

    def test_single_leaf_tree(self):
        tree = make_tree(1, seed=0)
        index = build_index(tree)
        assert index.query(0, 0) == 0

    def test_euler_tour_shape(self):
        tree = make_tree(33, seed=4)
        index = LcaIndex(tree)
        # full binary tree: 3 visits per internal node, 1 per leaf
        assert len(index.tour) == 3 * (tree.n - 1) + tree.n
        # adjacent tour entries differ by exactly one level
        levels = [tree.level[v] for v in index.tour]
        assert all(abs(a - b) == 1 for a, b in zip(levels, levels[1:]))

    def test_deep_caterpillar(self):
        tree = make_tree(4000, seed=2, shape="caterpillar")
        index = LcaIndex(tree)
        leaves = tree.leaf_ids
        for i in range(0, 4000, 397):
            for j in range(1, 4000, 401):
                assert index.query(leaves[i], leaves[j]) == lca_naive(tree, leaves[i], leaves[j])

    def test_lca_has_smallest_time_among_common_ancestors(self):
        # strict monotonicity: structural LCA = min-time common ancestor
        tree = make_tree(40, seed=13)
        index = LcaIndex(tree)
        leaves = tree.leaf_ids
        for i in range(0, 40, 7):
            for j in range(3, 40, 11):
                u, v = leaves[i], leaves[j]
                if u == v:
                    continue
                w = index.query(u, v)
                anc = w
                while anc != 0:
                    anc = tree.parent[anc]
                    assert tree.time[anc] > tree.time[w]
