"""Spanning trees: Kruskal MST, rooted preorder labeling, LCA queries."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .graph import Graph


@dataclass
class RootedTree:
    """Rooted spanning tree with preorder labels.

    parent[root] == root and parent_edge[root] == -1. label is a preorder
    numbering, so v is a descendant of u (u included) exactly when
    label[u] <= label[v] <= max_label[u]. preorder lists vertices by
    ascending label.
    """

    root: int
    parent: list[int]
    parent_edge: list[int]
    depth: list[int]
    label: list[int]
    max_label: list[int]
    children: list[list[int]]
    preorder: list[int]

    @property
    def n(self) -> int:
        return len(self.parent)

    def tree_edge_ids(self) -> list[int]:
        return sorted(e for e in self.parent_edge if e >= 0)


class UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        return True


def minimum_spanning_tree(g: Graph, values: Sequence[float]) -> np.ndarray:
    """Edge ids of a minimum-total-value spanning tree.

    Kruskal with ties broken by canonical edge id, so the result is
    deterministic for a fixed value array.
    """
    vals = np.asarray(values, dtype=np.float64)
    if len(vals) != g.m:
        raise ValueError("values length must equal edge count")
    if not np.all(np.isfinite(vals)):
        raise ValueError("edge values must be finite")
    order = np.lexsort((np.arange(g.m), vals)).tolist()
    eu = g.edge_u.tolist()
    ev = g.edge_v.tolist()
    uf = UnionFind(g.n)
    chosen = []
    need = g.n - 1
    for e in order:
        if uf.union(eu[e], ev[e]):
            chosen.append(e)
            if len(chosen) == need:
                break
    if len(chosen) != need:
        raise ValueError("graph is not connected")
    chosen.sort()
    return np.asarray(chosen, dtype=np.int64)


def root_and_label(g: Graph, tree_edges: Iterable[int], root: int) -> RootedTree:
    """Root a spanning tree and compute preorder labels in one traversal.

    Children are visited in ascending vertex id, making labels independent
    of the order in which tree edges are supplied.
    """
    n = g.n
    edges = list(tree_edges)
    if len(edges) != n - 1:
        raise ValueError("tree_edges must contain exactly n-1 edges")
    if not 0 <= root < n:
        raise ValueError("root out of range")
    tadj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for e in edges:
        u = int(g.edge_u[e])
        v = int(g.edge_v[e])
        tadj[u].append((v, e))
        tadj[v].append((u, e))
    for lst in tadj:
        lst.sort()

    parent = [-1] * n
    parent_edge = [-1] * n
    depth = [0] * n
    label = [-1] * n
    children: list[list[int]] = [[] for _ in range(n)]
    preorder: list[int] = []

    parent[root] = root
    stack = [root]
    while stack:
        u = stack.pop()
        label[u] = len(preorder)
        preorder.append(u)
        # Reversed push so the smallest-id child is labeled first.
        for v, e in reversed(tadj[u]):
            if parent[v] == -1 and v != root:
                parent[v] = u
                parent_edge[v] = e
                depth[v] = depth[u] + 1
                children[u].append(v)
                stack.append(v)
    if len(preorder) != n:
        raise ValueError("tree_edges do not span the graph")
    for u in range(n):
        children[u].sort()

    max_label = label[:]
    for v in reversed(preorder):
        p = parent[v]
        if p != v and max_label[v] > max_label[p]:
            max_label[p] = max_label[v]
    return RootedTree(root, parent, parent_edge, depth, label, max_label,
                      children, preorder)


def lca(t: RootedTree, u: int, v: int) -> int:
    """Lowest common ancestor by walking the deeper vertex up first."""
    depth = t.depth
    parent = t.parent
    while depth[u] > depth[v]:
        u = parent[u]
    while depth[v] > depth[u]:
        v = parent[v]
    while u != v:
        u = parent[u]
        v = parent[v]
    return u
