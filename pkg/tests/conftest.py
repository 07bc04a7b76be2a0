"""Shared fixtures: tiny named graphs, seeded random corpora, oracles."""

from __future__ import annotations

import random

import pytest

from treepart import Graph


@pytest.fixture
def p3():
    """Path a-b-c with unit weights (vertices 0-1-2)."""
    return Graph.from_edges(3, [(0, 1), (1, 2)])


@pytest.fixture
def c4():
    """4-cycle 0-1-2-3-0 with unit weights."""
    return Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])


@pytest.fixture
def p4():
    """Path 0-1-2-3 with unit weights."""
    return Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])


@pytest.fixture
def k2():
    return Graph.from_edges(2, [(0, 1)])


@pytest.fixture
def triangle():
    return Graph.from_edges(3, [(0, 1), (0, 2), (1, 2)])


@pytest.fixture
def star_plus():
    """Star 0-1 with 1-2, 1-3 plus the extra edge {2, 3}."""
    return Graph.from_edges(4, [(0, 1), (1, 2), (1, 3), (2, 3)])


def random_connected_graph(rng: random.Random, n_lo: int = 3, n_hi: int = 12,
                           w_lo: int = 1, w_hi: int = 10,
                           extra_frac: float = 0.6) -> Graph:
    """Random connected graph: a random spanning tree plus extra edges."""
    n = rng.randint(n_lo, n_hi)
    verts = list(range(n))
    rng.shuffle(verts)
    edges = set()
    for i in range(1, n):
        u = verts[rng.randrange(i)]
        v = verts[i]
        edges.add((min(u, v), max(u, v)))
    max_extra = n * (n - 1) // 2 - (n - 1)
    for _ in range(int(extra_frac * n * 2)):
        if len(edges) - (n - 1) >= max_extra:
            break
        u, v = rng.randrange(n), rng.randrange(n)
        if u != v:
            edges.add((min(u, v), max(u, v)))
    edge_list = sorted(edges)
    weights = [rng.randint(w_lo, w_hi) for _ in edge_list]
    return Graph.from_edges(n, edge_list, edge_weights=weights)


def random_balanced_blocks(g: Graph, rng: random.Random) -> list[int] | None:
    """Random bipartition with ceil(n/2) zeros; None when unbalanceable."""
    n = g.n
    if n < 2:
        return None
    ids = list(range(n))
    rng.shuffle(ids)
    block = [1] * n
    for v in ids[: (n + 1) // 2]:
        block[v] = 0
    return block
