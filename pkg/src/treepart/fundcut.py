"""Conductance of every fundamental cut of a rooted spanning tree.

Removing one tree edge splits the vertices into the subtree below the
edge's child endpoint and the rest. The conductance of that cut is the
total weight of crossing edges divided by the smaller side's volume
(volume = sum of weighted degrees).

The fast path computes all n-1 values in a single postorder traversal that
aggregates three per-vertex quantities:

  subtree_vol[u]   volume of the subtree rooted at u
  intra_weight[u]  twice the weight of non-tree edges whose endpoints lie
                   in different child subtrees of u, plus once the weight
                   of non-tree edges from u down into its own subtree
  inter_weight[u]  weight of non-tree edges leaving u's subtree

so that the cut weight of u's parent edge is inter_weight[u] plus the
parent edge's own weight. Every adjacency entry is inspected exactly once,
giving O(|E|) work overall.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Graph
from .spantree import RootedTree


@dataclass
class CutAttributes:
    subtree_vol: np.ndarray
    intra_weight: np.ndarray
    inter_weight: np.ndarray


def _traverse(g: Graph, t: RootedTree, stats: dict | None):
    if t.n != g.n:
        raise ValueError("tree does not match graph")
    n = g.n
    off = g.adj_off_list
    nbr = g.adj_nbr_list
    eid = g.adj_eid_list
    w = g.edge_w_list
    wdeg = g.weighted_degree.tolist()
    total = g.total_volume

    label = t.label
    max_label = t.max_label
    parent = t.parent
    depth = t.depth
    children = t.children

    is_tree = bytearray(g.m)
    for e in t.parent_edge:
        if e >= 0:
            is_tree[e] = 1

    sub = [0.0] * n
    intra = [0.0] * n
    inter = [0.0] * n
    cond = np.full(g.m, np.nan)
    visits = 0

    for u in reversed(t.preorder):
        pe = -1
        if not children[u]:
            # Leaf: subtree volume is the vertex's own weighted degree and
            # every incident non-tree edge leaves the subtree.
            sub[u] = wdeg[u]
            for i in range(off[u], off[u + 1]):
                visits += 1
                e = eid[i]
                if is_tree[e]:
                    pe = e
                else:
                    a, b = u, nbr[i]
                    while depth[a] > depth[b]:
                        a = parent[a]
                    while depth[b] > depth[a]:
                        b = parent[b]
                    while a != b:
                        a = parent[a]
                        b = parent[b]
                    intra[a] += w[e]
                    inter[u] += w[e]
        else:
            lu = label[u]
            ml = max_label[u]
            for i in range(off[u], off[u + 1]):
                visits += 1
                e = eid[i]
                v = nbr[i]
                if is_tree[e]:
                    if lu < label[v]:
                        sub[u] += sub[v]
                        inter[u] += inter[v]
                    else:
                        pe = e
                else:
                    lv = label[v]
                    if lv < lu or lv > ml:
                        # v outside u's subtree; edges into the subtree were
                        # already accounted at the other endpoint.
                        a, b = u, v
                        while depth[a] > depth[b]:
                            a = parent[a]
                        while depth[b] > depth[a]:
                            b = parent[b]
                        while a != b:
                            a = parent[a]
                            b = parent[b]
                        intra[a] += w[e]
                        inter[u] += w[e]
            sub[u] += wdeg[u]
            inter[u] -= intra[u]
        if pe >= 0:
            cond[pe] = (inter[u] + w[pe]) / min(sub[u], total - sub[u])

    if stats is not None:
        stats["adjacency_visits"] = visits
        stats["vertex_visits"] = n
    return cond, sub, intra, inter


def all_fundamental_conductances(g: Graph, t: RootedTree,
                                 stats: dict | None = None) -> np.ndarray:
    """Conductance of each tree edge's fundamental cut.

    Returns a dense array over canonical edge ids; entries for non-tree
    edges are NaN. Pass a dict as `stats` to collect adjacency-visit
    counters for work-bound checks.
    """
    cond, _, _, _ = _traverse(g, t, stats)
    return cond


def cut_attributes(g: Graph, t: RootedTree) -> CutAttributes:
    """The three per-vertex aggregates computed by the traversal."""
    _, sub, intra, inter = _traverse(g, t, None)
    return CutAttributes(np.asarray(sub), np.asarray(intra), np.asarray(inter))


def brute_force_conductance(g: Graph, t: RootedTree, edge_id: int) -> float:
    """Oracle: delete the tree edge, two-color, and apply the definition.

    Independent of the traversal above; used to validate it.
    """
    a = int(g.edge_u[edge_id])
    b = int(g.edge_v[edge_id])
    if t.parent_edge[a] != edge_id and t.parent_edge[b] != edge_id:
        raise ValueError("edge is not a tree edge")
    tadj: list[list[int]] = [[] for _ in range(g.n)]
    for v, e in enumerate(t.parent_edge):
        if e >= 0 and e != edge_id:
            p = t.parent[v]
            tadj[v].append(p)
            tadj[p].append(v)
    side = bytearray(g.n)
    side[a] = 1
    vol_a = float(g.weighted_degree[a])
    queue = [a]
    while queue:
        u = queue.pop()
        for v in tadj[u]:
            if not side[v]:
                side[v] = 1
                vol_a += float(g.weighted_degree[v])
                queue.append(v)
    cut = 0.0
    for e in range(g.m):
        if side[g.edge_u[e]] != side[g.edge_v[e]]:
            cut += float(g.edge_w[e])
    return cut / min(vol_a, g.total_volume - vol_a)
