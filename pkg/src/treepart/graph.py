"""Undirected weighted graph in CSR-style adjacency form.

Vertices are 0-based integers. Every undirected edge gets one canonical id,
its rank in the list of endpoint pairs sorted by (min endpoint, max endpoint).
All edge-indexed arrays in this package (contrast values, conductances,
ratings) use these ids.
"""

from __future__ import annotations

from functools import cached_property
from typing import Iterable, Sequence

import numpy as np


class Graph:
    """Finite, undirected, simple graph with vertex and edge weights.

    Immutable after construction; safe to share across concurrent runs.
    Use :meth:`from_edges` to build one.

    Attributes:
        n: number of vertices
        m: number of undirected edges
        edge_u, edge_v: canonical endpoint arrays with edge_u[e] < edge_v[e]
        edge_w: positive edge weights (float64)
        vertex_c: positive integer vertex weights
        adj_off, adj_nbr, adj_eid: CSR adjacency; the neighbors of u are
            adj_nbr[adj_off[u]:adj_off[u+1]], sorted ascending, and
            adj_eid carries the canonical edge id of each entry
    """

    def __init__(self, n: int, edge_u: np.ndarray, edge_v: np.ndarray,
                 edge_w: np.ndarray, vertex_c: np.ndarray):
        self.n = n
        self.m = len(edge_u)
        self.edge_u = edge_u
        self.edge_v = edge_v
        self.edge_w = edge_w
        self.vertex_c = vertex_c
        self.adj_off, self.adj_nbr, self.adj_eid = self._build_csr()

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]],
                   edge_weights: Sequence[float] | None = None,
                   vertex_weights: Sequence[int] | None = None) -> "Graph":
        """Build a graph from an edge list, assigning canonical edge ids.

        Parallel edges are merged by summing their weights. Self-loops are
        rejected. Missing weights default to 1.
        """
        if n < 1:
            raise ValueError("graph needs at least one vertex")
        pairs = np.asarray(list(edges), dtype=np.int64).reshape(-1, 2)
        if pairs.size and (pairs.min() < 0 or pairs.max() >= n):
            raise ValueError("vertex id out of range")
        if edge_weights is None:
            w = np.ones(len(pairs), dtype=np.float64)
        else:
            w = np.asarray(edge_weights, dtype=np.float64)
            if len(w) != len(pairs):
                raise ValueError("edge_weights length mismatch")
        if np.any(w <= 0):
            raise ValueError("edge weights must be strictly positive")

        lo = np.minimum(pairs[:, 0], pairs[:, 1])
        hi = np.maximum(pairs[:, 0], pairs[:, 1])
        if np.any(lo == hi):
            raise ValueError("self-loops are not allowed")

        order = np.lexsort((hi, lo))
        lo, hi, w = lo[order], hi[order], w[order]
        if len(lo):
            new_edge = np.empty(len(lo), dtype=bool)
            new_edge[0] = True
            new_edge[1:] = (lo[1:] != lo[:-1]) | (hi[1:] != hi[:-1])
            starts = np.flatnonzero(new_edge)
            edge_u = lo[starts]
            edge_v = hi[starts]
            edge_w = np.add.reduceat(w, starts)
        else:
            edge_u = np.empty(0, dtype=np.int64)
            edge_v = np.empty(0, dtype=np.int64)
            edge_w = np.empty(0, dtype=np.float64)

        if vertex_weights is None:
            c = np.ones(n, dtype=np.int64)
        else:
            c = np.asarray(vertex_weights, dtype=np.int64)
            if len(c) != n:
                raise ValueError("vertex_weights length mismatch")
            if np.any(c <= 0):
                raise ValueError("vertex weights must be positive integers")
        return cls(n, edge_u, edge_v, edge_w, c)

    def _build_csr(self):
        ends = np.concatenate([self.edge_u, self.edge_v])
        other = np.concatenate([self.edge_v, self.edge_u])
        eids = np.concatenate([np.arange(self.m), np.arange(self.m)])
        order = np.lexsort((other, ends))
        nbr = other[order]
        eid = eids[order]
        counts = np.bincount(ends, minlength=self.n)
        off = np.concatenate([[0], np.cumsum(counts)]).astype(np.int64)
        return off, nbr, eid

    # Python-list mirrors of the CSR arrays; plain ints are much faster than
    # numpy scalars in the traversal loops.
    @cached_property
    def adj_off_list(self) -> list[int]:
        return self.adj_off.tolist()

    @cached_property
    def adj_nbr_list(self) -> list[int]:
        return self.adj_nbr.tolist()

    @cached_property
    def adj_eid_list(self) -> list[int]:
        return self.adj_eid.tolist()

    @cached_property
    def edge_w_list(self) -> list[float]:
        return self.edge_w.tolist()

    @cached_property
    def adj_w_list(self) -> list[float]:
        """Edge weight per CSR adjacency entry."""
        return self.edge_w[self.adj_eid].tolist()

    @cached_property
    def csr_src(self) -> np.ndarray:
        """Source vertex of each CSR adjacency entry."""
        counts = self.adj_off[1:] - self.adj_off[:-1]
        return np.repeat(np.arange(self.n, dtype=np.int64), counts)

    @cached_property
    def weighted_degree(self) -> np.ndarray:
        wdeg = np.zeros(self.n, dtype=np.float64)
        np.add.at(wdeg, self.edge_u, self.edge_w)
        np.add.at(wdeg, self.edge_v, self.edge_w)
        return wdeg

    @cached_property
    def total_volume(self) -> float:
        """Sum of all weighted degrees, i.e. twice the total edge weight."""
        return float(2.0 * self.edge_w.sum())

    @cached_property
    def edge_ids(self) -> dict[tuple[int, int], int]:
        """Map from (min endpoint, max endpoint) to canonical edge id."""
        return {(int(u), int(v)): e
                for e, (u, v) in enumerate(zip(self.edge_u, self.edge_v))}

    def degree(self, v: int) -> int:
        return int(self.adj_off[v + 1] - self.adj_off[v])

    def neighbors(self, v: int) -> list[int]:
        return self.adj_nbr[self.adj_off[v]:self.adj_off[v + 1]].tolist()


def volume(g: Graph, vertices: Iterable[int]) -> float:
    """Total weighted degree of a vertex set.

    Edges with both endpoints inside the set count twice, once per endpoint.
    """
    idx = np.fromiter(vertices, dtype=np.int64)
    if idx.size == 0:
        return 0.0
    if idx.min() < 0 or idx.max() >= g.n:
        raise ValueError("vertex id out of range")
    return float(g.weighted_degree[idx].sum())


def check_connected(g: Graph) -> bool:
    """True iff a BFS from vertex 0 reaches every vertex."""
    if g.n <= 1:
        return True
    off = g.adj_off_list
    nbr = g.adj_nbr_list
    seen = bytearray(g.n)
    seen[0] = 1
    frontier = [0]
    head = 0
    while head < len(frontier):
        u = frontier[head]
        head += 1
        for i in range(off[u], off[u + 1]):
            t = nbr[i]
            if not seen[t]:
                seen[t] = 1
                frontier.append(t)
    return len(frontier) == g.n


def connected_components(g: Graph) -> list[list[int]]:
    off = g.adj_off_list
    nbr = g.adj_nbr_list
    seen = bytearray(g.n)
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = 1
        comp = [s]
        head = 0
        while head < len(comp):
            u = comp[head]
            head += 1
            for i in range(off[u], off[u + 1]):
                t = nbr[i]
                if not seen[t]:
                    seen[t] = 1
                    comp.append(t)
        comps.append(comp)
    return comps


def largest_component(g: Graph) -> tuple[Graph, np.ndarray]:
    """Extract the largest connected component as a new graph.

    Returns the subgraph plus an array mapping its vertex ids back to the
    original ids. Intended as preprocessing for inputs that are not connected.
    """
    comps = connected_components(g)
    keep = max(comps, key=len)
    keep.sort()
    old_ids = np.asarray(keep, dtype=np.int64)
    new_id = -np.ones(g.n, dtype=np.int64)
    new_id[old_ids] = np.arange(len(keep))
    mask = new_id[g.edge_u] >= 0
    sub = Graph.from_edges(
        len(keep),
        zip(new_id[g.edge_u[mask]], new_id[g.edge_v[mask]]),
        edge_weights=g.edge_w[mask],
        vertex_weights=g.vertex_c[old_ids],
    )
    return sub, old_ids
