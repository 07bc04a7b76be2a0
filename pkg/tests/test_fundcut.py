import random

import numpy as np
import pytest

from treepart import (all_fundamental_conductances,
                      brute_force_conductance, cut_attributes, lca,
                      root_and_label, sample_bft, volume)
from tests.conftest import random_connected_graph


def descendants(t, u):
    return [x for x in range(t.n)
            if t.label[u] <= t.label[x] <= t.max_label[u]]


def brute_attributes(g, t, u):
    """Evaluate the three vertex aggregates straight from their definitions."""
    desc = set(descendants(t, u))
    sub = volume(g, desc)
    tree_edges = set(t.tree_edge_ids())
    intra = 0.0
    inter = 0.0
    for e in range(g.m):
        a, b = int(g.edge_u[e]), int(g.edge_v[e])
        w = float(g.edge_w[e])
        if a != u and b != u and a in desc and b in desc and lca(t, a, b) == u:
            intra += 2.0 * w
        if e not in tree_edges:
            if (a == u and b in desc) or (b == u and a in desc):
                intra += w
            if (a in desc) != (b in desc):
                inter += w
    return sub, intra, inter


class TestExamples:
    def test_p3_leaf_cut(self, p3):
        t = root_and_label(p3, [0, 1], root=2)
        conds = all_fundamental_conductances(p3, t)
        assert conds[p3.edge_ids[(0, 1)]] == pytest.approx(1.0)

    def test_c4_path_tree_middle_edge(self, c4):
        # Spanning tree is the path 0-1-2-3; cutting {1, 2} crosses {1,2}
        # and {0, 3}.
        tree = [c4.edge_ids[(0, 1)], c4.edge_ids[(1, 2)], c4.edge_ids[(2, 3)]]
        t = root_and_label(c4, tree, root=0)
        conds = all_fundamental_conductances(c4, t)
        e = c4.edge_ids[(1, 2)]
        assert conds[e] == pytest.approx(0.5)
        assert conds[e] == pytest.approx(brute_force_conductance(c4, t, e))

    def test_star_plus_attributes_and_cond(self, star_plus):
        g = star_plus
        tree = [g.edge_ids[(0, 1)], g.edge_ids[(1, 2)], g.edge_ids[(1, 3)]]
        t = root_and_label(g, tree, root=0)
        attrs = cut_attributes(g, t)
        assert attrs.intra_weight[1] == pytest.approx(2.0)
        assert attrs.inter_weight[1] == pytest.approx(0.0)
        assert attrs.subtree_vol[1] == pytest.approx(7.0)
        conds = all_fundamental_conductances(g, t)
        assert conds[g.edge_ids[(0, 1)]] == pytest.approx(1.0)

    def test_triangle_brute_force(self, triangle):
        t = root_and_label(triangle, [0, 2], root=0)  # tree {01, 12}
        e = triangle.edge_ids[(0, 1)]
        assert brute_force_conductance(triangle, t, e) == pytest.approx(1.0)

    def test_non_tree_edge_rejected(self, c4):
        tree = [0, 1, 2]
        t = root_and_label(c4, tree, root=0)
        non_tree = [e for e in range(c4.m) if e not in tree][0]
        with pytest.raises(ValueError, match="not a tree edge"):
            brute_force_conductance(c4, t, non_tree)

    def test_mismatched_tree_rejected(self, p3, c4):
        t = root_and_label(p3, [0, 1], root=0)
        with pytest.raises(ValueError, match="does not match"):
            all_fundamental_conductances(c4, t)


class TestAgainstOracle:
    def test_matches_brute_force_on_random_corpus(self):
        rng = random.Random(101)
        for _ in range(200):
            g = random_connected_graph(rng)
            t = sample_bft(g, rng.randrange(2 ** 32))
            conds = all_fundamental_conductances(g, t)
            tree_ids = set(t.tree_edge_ids())
            for e in range(g.m):
                if e in tree_ids:
                    assert conds[e] == pytest.approx(
                        brute_force_conductance(g, t, e), abs=1e-9)
                else:
                    assert np.isnan(conds[e])

    def test_attribute_equalities_random(self):
        rng = random.Random(202)
        for _ in range(60):
            g = random_connected_graph(rng)
            t = sample_bft(g, rng.randrange(2 ** 32))
            attrs = cut_attributes(g, t)
            for u in range(g.n):
                sub, intra, inter = brute_attributes(g, t, u)
                assert attrs.subtree_vol[u] == sub
                assert attrs.intra_weight[u] == intra
                assert attrs.inter_weight[u] == inter

    def test_subtree_volume_conservation(self):
        rng = random.Random(303)
        g = random_connected_graph(rng)
        t = sample_bft(g, 5)
        attrs = cut_attributes(g, t)
        child_sum = sum(attrs.subtree_vol[c] for c in t.children[t.root])
        assert child_sum + volume(g, [t.root]) == pytest.approx(
            g.total_volume)

    def test_conductance_positive_and_bounded(self):
        rng = random.Random(404)
        for _ in range(40):
            g = random_connected_graph(rng)
            t = sample_bft(g, rng.randrange(2 ** 32))
            conds = all_fundamental_conductances(g, t)
            for e in t.tree_edge_ids():
                assert conds[e] > 0
                assert np.isfinite(conds[e])

    def test_visit_counter_bound(self):
        rng = random.Random(505)
        for _ in range(30):
            g = random_connected_graph(rng)
            t = sample_bft(g, rng.randrange(2 ** 32))
            stats = {}
            all_fundamental_conductances(g, t, stats)
            assert stats["adjacency_visits"] + stats["vertex_visits"] \
                <= 2 * g.m + g.n
