import random

import numpy as np
import pytest

from treepart import Graph, check_connected, largest_component, volume
from tests.conftest import random_connected_graph


class TestConstruction:
    def test_canonical_ids_sorted_by_endpoints(self):
        g = Graph.from_edges(4, [(3, 2), (1, 0), (2, 0)])
        assert list(zip(g.edge_u, g.edge_v)) == [(0, 1), (0, 2), (2, 3)]

    def test_parallel_edges_merge_by_summing(self):
        g = Graph.from_edges(2, [(0, 1), (1, 0)], edge_weights=[2.0, 3.0])
        assert g.m == 1
        assert g.edge_w[0] == 5.0

    def test_self_loop_rejected(self):
        with pytest.raises(ValueError):
            Graph.from_edges(2, [(0, 0)])

    def test_nonpositive_weights_rejected(self):
        with pytest.raises(ValueError):
            Graph.from_edges(2, [(0, 1)], edge_weights=[0.0])
        with pytest.raises(ValueError):
            Graph.from_edges(2, [(0, 1)], vertex_weights=[1, 0])

    def test_vertex_out_of_range(self):
        with pytest.raises(ValueError):
            Graph.from_edges(2, [(0, 2)])

    def test_adjacency_symmetric(self):
        rng = random.Random(7)
        for _ in range(25):
            g = random_connected_graph(rng)
            pairs = set()
            for u in range(g.n):
                for i in range(g.adj_off[u], g.adj_off[u + 1]):
                    pairs.add((u, int(g.adj_nbr[i]), int(g.adj_eid[i])))
            for u, v, e in pairs:
                assert (v, u, e) in pairs
                assert {u, v} == {int(g.edge_u[e]), int(g.edge_v[e])}


class TestVolume:
    def test_middle_vertex_of_path(self, p3):
        assert volume(p3, [1]) == 2.0

    def test_whole_vertex_set_is_twice_edge_weight(self, p3):
        assert volume(p3, [0, 1, 2]) == 4.0

    def test_degree_sum_over_subset(self, p3):
        assert volume(p3, [0, 1]) == 3.0

    def test_handshake_identity_random(self):
        rng = random.Random(11)
        for _ in range(20):
            g = random_connected_graph(rng)
            total = sum(volume(g, [v]) for v in range(g.n))
            assert total == pytest.approx(2.0 * g.edge_w.sum())

    def test_additive_over_disjoint_sets(self):
        rng = random.Random(13)
        for _ in range(20):
            g = random_connected_graph(rng)
            verts = list(range(g.n))
            rng.shuffle(verts)
            k = rng.randrange(g.n + 1)
            a, b = verts[:k], verts[k:]
            assert volume(g, a) + volume(g, b) == pytest.approx(volume(g, verts))


class TestConnectivity:
    def test_path_connected(self, p3):
        assert check_connected(p3)

    def test_two_disjoint_edges(self):
        g = Graph.from_edges(4, [(0, 1), (2, 3)])
        assert not check_connected(g)

    def test_single_vertex(self):
        g = Graph.from_edges(1, [])
        assert check_connected(g)

    def test_largest_component_extraction(self):
        g = Graph.from_edges(6, [(0, 1), (1, 2), (3, 4)],
                             edge_weights=[2, 3, 4],
                             vertex_weights=[1, 2, 3, 4, 5, 6])
        sub, old = largest_component(g)
        assert check_connected(sub)
        assert sub.n == 3
        assert list(old) == [0, 1, 2]
        assert list(sub.vertex_c) == [1, 2, 3]
        assert sorted(sub.edge_w) == [2, 3]
