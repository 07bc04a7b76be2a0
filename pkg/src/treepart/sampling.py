"""Random breadth-first-traversal spanning trees and per-edge contrast.

Each sampled tree picks a root uniformly at random and runs a plain BFS,
but processes the edges incident on each vertex in an independent random
order. The contrast of an edge is the smaller of the two per-orientation
counts of trees containing it, accumulated over a whole tree collection.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from .graph import Graph
from .spantree import RootedTree, root_and_label


@dataclass
class DirectedEdgeCounts:
    """Per-edge tree counts split by which endpoint was nearer the root.

    min_closer[e] counts sampled trees containing edge e in which the
    canonical smaller endpoint is closer to the root; max_closer[e] the
    other orientation. Their sum is at most the number of trees.
    """

    trees: int
    min_closer: np.ndarray
    max_closer: np.ndarray


def _bft_arrays(g: Graph, seed: int):
    """BFS tree with randomized root and neighbor order; parent arrays only.

    Each adjacency entry gets an independent uniform sort key, which orders
    every vertex's neighbor list by a fresh random permutation. The BFS is
    run level-synchronously: an undiscovered vertex is claimed by the
    frontier entry minimizing (queue position of the source, entry key),
    which reproduces a sequential BFS that scans each popped vertex's
    neighbors in key order. The next frontier is queued by the same keys.
    """
    n = g.n
    rng = np.random.default_rng(seed)
    root = int(rng.integers(n))
    parent = np.full(n, -1, dtype=np.int64)
    parent_edge = np.full(n, -1, dtype=np.int64)
    depth = np.zeros(n, dtype=np.int64)
    parent[root] = root
    if n == 1:
        return root, parent, parent_edge, depth
    keys = rng.random(2 * g.m)
    off = g.adj_off
    visited = np.zeros(n, dtype=bool)
    visited[root] = True
    frontier = np.asarray([root], dtype=np.int64)
    reached = 1
    d = 0
    while frontier.size:
        starts = off[frontier]
        counts = off[frontier + 1] - starts
        total = int(counts.sum())
        if total == 0:
            break
        shift = np.concatenate([[0], np.cumsum(counts)[:-1]])
        entries = np.repeat(starts - shift, counts) + np.arange(total)
        tgt = g.adj_nbr[entries]
        new = ~visited[tgt]
        if not new.any():
            break
        tgt = tgt[new]
        entries = entries[new]
        rank = np.repeat(np.arange(frontier.size), counts)[new]
        claim = rank + keys[entries]
        order = np.lexsort((claim, tgt))
        tgt_sorted = tgt[order]
        first = np.empty(len(order), dtype=bool)
        first[0] = True
        first[1:] = tgt_sorted[1:] != tgt_sorted[:-1]
        sel = order[first]
        chosen = tgt[sel]
        parent[chosen] = frontier[rank[sel]]
        parent_edge[chosen] = g.adj_eid[entries[sel]]
        d += 1
        depth[chosen] = d
        visited[chosen] = True
        reached += chosen.size
        frontier = chosen[np.argsort(claim[sel], kind="stable")]
    if reached != n:
        raise ValueError("graph is not connected")
    return root, parent, parent_edge, depth


def sample_bft(g: Graph, seed: int) -> RootedTree:
    """Sample one random BFT spanning tree, deterministic per seed."""
    root, _, parent_edge, _ = _bft_arrays(g, seed)
    edges = parent_edge[parent_edge >= 0].tolist()
    return root_and_label(g, edges, root)


def subseeds(seed: int, count: int) -> list[int]:
    """Derive independent per-tree seeds from a collection seed."""
    master = random.Random(seed)
    return [master.getrandbits(64) for _ in range(count)]


def directed_edge_counts(g: Graph, trees: int, seed: int) -> DirectedEdgeCounts:
    """Accumulate orientation counts over `trees` sampled BFT trees."""
    if trees < 1:
        raise ValueError("need at least one tree")
    min_closer = np.zeros(g.m, dtype=np.int64)
    max_closer = np.zeros(g.m, dtype=np.int64)
    child_ids = np.arange(g.n, dtype=np.int64)
    for sub in subseeds(seed, trees):
        _, pa, pe, _ = _bft_arrays(g, sub)
        mask = pe >= 0
        e = pe[mask]
        parent_is_min = pa[mask] < child_ids[mask]
        # Parent-edge ids are distinct within one tree, so plain indexed
        # increments are safe.
        min_closer[e[parent_is_min]] += 1
        max_closer[e[~parent_is_min]] += 1
    return DirectedEdgeCounts(trees, min_closer, max_closer)


def contrast(g: Graph, trees: int, seed: int) -> np.ndarray:
    """Per-edge contrast: min over orientations of the tree counts."""
    counts = directed_edge_counts(g, trees, seed)
    return np.minimum(counts.min_closer, counts.max_closer)
