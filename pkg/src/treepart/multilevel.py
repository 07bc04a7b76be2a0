"""Multilevel bipartitioner: match, contract, partition, refine, prolong.

Coarsening repeatedly contracts a maximal matching chosen greedily by edge
rating, recomputing the rating on every level because contraction changes
both edge and vertex weights. The coarsest graph is bipartitioned by seeded
region growing, and the solution is prolonged back level by level with a
boundary FM refinement pass at each step.
"""

from __future__ import annotations

import heapq
import logging
import math
import random
from dataclasses import dataclass

import numpy as np

from .fundcut import all_fundamental_conductances
from .graph import Graph, check_connected
from .partition import Partition, balance_cap, is_balanced
from .rating import (algebraic_distance, cond_all_edges, ex_alg, ex_cond,
                     expansion_star2)
from .sampling import contrast
from .spantree import minimum_spanning_tree, root_and_label

logger = logging.getLogger(__name__)

RATINGS = ("excond", "exalg", "exp2")


@dataclass
class PartitionConfig:
    """Knobs for one partitioning run. Two runs with equal config and seed
    produce identical partitions."""

    rating: str = "excond"
    trees: int = 20
    epsilon: float = 0.03
    seed: int = 0
    coarsest_size: int = 60
    initial_attempts: int = 25
    max_fm_passes: int = 10
    shrink_limit: float = 1.05
    alg_vectors: int = 8
    alg_iterations: int = 10
    alg_relaxation: float = 0.5
    rho_min: float = 1e-9

    def __post_init__(self):
        if self.rating not in RATINGS:
            raise ValueError(f"unknown rating {self.rating!r}")


def compute_rating(g: Graph, cfg: PartitionConfig, seed: int) -> np.ndarray:
    """Per-edge rating of the configured kind, deterministic per seed."""
    if cfg.rating == "exp2":
        return expansion_star2(g)
    rng = random.Random(seed)
    if cfg.rating == "exalg":
        rho = algebraic_distance(g, cfg.alg_vectors, cfg.alg_iterations,
                                 cfg.alg_relaxation, cfg.rho_min,
                                 seed=rng.getrandbits(64))
        return ex_alg(g, rho)
    gamma = contrast(g, cfg.trees, rng.getrandbits(64))
    mst_ids = minimum_spanning_tree(g, gamma)
    root = rng.randrange(g.n)
    tree = root_and_label(g, mst_ids, root)
    conds = all_fundamental_conductances(g, tree)
    return ex_cond(g, cond_all_edges(g, tree, conds))


def greedy_matching(g: Graph, rating: np.ndarray,
                    max_vertex_weight: float) -> np.ndarray:
    """Maximal matching built from edges in descending rating order.

    Ties break on canonical edge id. An edge is skipped when either endpoint
    is already matched or the merged vertex would exceed max_vertex_weight.
    Returns the mate of each vertex, -1 if unmatched.
    """
    vals = np.asarray(rating, dtype=np.float64)
    if len(vals) != g.m:
        raise ValueError("rating length must equal edge count")
    if not np.all(np.isfinite(vals)):
        raise ValueError("ratings must be finite")
    order = np.lexsort((np.arange(g.m), -vals)).tolist()
    eu = g.edge_u.tolist()
    ev = g.edge_v.tolist()
    c = g.vertex_c.tolist()
    mate = [-1] * g.n
    for e in order:
        u, v = eu[e], ev[e]
        if mate[u] < 0 and mate[v] < 0 and c[u] + c[v] <= max_vertex_weight:
            mate[u] = v
            mate[v] = u
    return np.asarray(mate, dtype=np.int64)


def contract(g: Graph, mate: np.ndarray) -> tuple[Graph, np.ndarray]:
    """Merge matched pairs into single vertices.

    Vertex weights add up, parallel edges merge with summed weights, and
    self-loops vanish. Returns the coarse graph and the fine-to-coarse
    vertex map.
    """
    mate = np.asarray(mate, dtype=np.int64)
    ok = (mate < 0) | (mate[np.maximum(mate, 0)] == np.arange(g.n))
    if not ok.all():
        raise ValueError("mate array is not symmetric")
    cmap = np.empty(g.n, dtype=np.int64)
    nc = 0
    mate_l = mate.tolist()
    for v in range(g.n):
        mv = mate_l[v]
        if mv < 0 or mv > v:
            cmap[v] = nc
            nc += 1
        else:
            cmap[v] = cmap[mv]
    coarse_c = np.bincount(cmap, weights=g.vertex_c, minlength=nc)
    cu = cmap[g.edge_u]
    cv = cmap[g.edge_v]
    keep = cu != cv
    coarse = Graph.from_edges(nc, zip(cu[keep].tolist(), cv[keep].tolist()),
                              edge_weights=g.edge_w[keep],
                              vertex_weights=coarse_c.astype(np.int64))
    return coarse, cmap


def initial_bipartition(g: Graph, epsilon: float, attempts: int,
                        seed: int) -> Partition:
    """Best of several seeded BFS region growings on the coarsest graph.

    Each attempt grows block 0 from a random vertex until it reaches half
    the total weight, never adding a vertex that would break the balance
    cap. Balanced attempts are ranked by cut weight; if none is balanced the
    least-imbalanced attempt is returned (with a warning).
    """
    n = g.n
    if n == 1:
        return Partition.from_blocks(g, [0])
    total = int(g.vertex_c.sum())
    target = math.ceil(total / 2)
    cap = balance_cap(g, epsilon)
    c = g.vertex_c.tolist()
    off = g.adj_off_list
    nbr = g.adj_nbr_list
    rng = random.Random(seed)

    best_key = None
    best_block = None
    for attempt in range(max(1, attempts)):
        start = rng.randrange(n)
        block = [1] * n
        w0 = 0
        queued = bytearray(n)
        queued[start] = 1
        queue = [start]
        head = 0
        while head < len(queue) and w0 < target:
            v = queue[head]
            head += 1
            if w0 + c[v] > cap:
                continue
            block[v] = 0
            w0 += c[v]
            for i in range(off[v], off[v + 1]):
                t = nbr[i]
                if not queued[t]:
                    queued[t] = 1
                    queue.append(t)
        w1 = total - w0
        balanced = w0 <= cap and w1 <= cap and 0 < w0 < total
        blk = np.asarray(block)
        cut = float(g.edge_w[blk[g.edge_u] != blk[g.edge_v]].sum())
        key = (0, cut, attempt) if balanced else (1, max(w0, w1), attempt)
        if best_key is None or key < best_key:
            best_key = key
            best_block = block
    if best_key[0] == 1:
        logger.warning("no balanced initial bipartition found; "
                       "returning least-imbalanced attempt")
    return Partition.from_blocks(g, best_block)


def fm_refine(g: Graph, p: Partition, epsilon: float, max_passes: int,
              stall_limit: int | None = None) -> Partition:
    """Pass-based boundary FM refinement of the edge cut.

    Each pass tentatively moves boundary vertices one at a time in
    max-gain order (a vertex moves at most once per pass, moves must keep
    balance) and commits the best prefix of the move sequence. A pass is
    cut short once `stall_limit` consecutive moves fail to produce a new
    best prefix; the tail of a stalled sequence is nearly always reverted
    anyway, and skipping it keeps passes cheap on large graphs. Stops after
    a pass without strict improvement, so the cut never increases.
    """
    out = p.copy()
    if g.n < 2 or g.m == 0:
        return out
    if stall_limit is None:
        stall_limit = max(100, g.n // 25)
    cap = balance_cap(g, epsilon)
    block = out.block
    bw = out.block_weight
    off = g.adj_off_list
    nbr = g.adj_nbr_list
    w = g.adj_w_list
    c = g.vertex_c.tolist()
    wdeg = g.weighted_degree.tolist()

    for _ in range(max(0, max_passes)):
        blk = np.asarray(block)
        cross = blk[g.edge_u] != blk[g.edge_v]
        start_cut = float(g.edge_w[cross].sum())
        across = (np.bincount(g.edge_u[cross], weights=g.edge_w[cross],
                              minlength=g.n)
                  + np.bincount(g.edge_v[cross], weights=g.edge_w[cross],
                                minlength=g.n)).tolist()

        # Heap entries carry the gain at push time. Improved gains push a
        # fresh entry right away; worsened ones are caught by comparing the
        # popped entry against the current gain and re-pushing.
        heap: list[tuple[float, int, int]] = []
        stamp = 0
        for v in range(g.n):
            if across[v] > 0:
                heap.append((wdeg[v] - 2.0 * across[v], stamp, v))
                stamp += 1
        heapq.heapify(heap)

        moved = bytearray(g.n)
        seq: list[int] = []
        cur = start_cut
        # Best prefix by (cut, heavier block weight): equal-cut prefixes
        # prefer the more balanced state.
        best = (start_cut, float(max(bw)))
        best_len = 0
        since_best = 0
        while heap and since_best < stall_limit:
            neg_gain, _, v = heapq.heappop(heap)
            if moved[v]:
                continue
            current = wdeg[v] - 2.0 * across[v]
            if neg_gain != current:
                if across[v] > 0:
                    heapq.heappush(heap, (current, stamp, v))
                    stamp += 1
                continue
            b = block[v]
            o = 1 - b
            if bw[o] + c[v] > cap or bw[b] == c[v]:
                continue
            moved[v] = 1
            block[v] = o
            bw[b] -= c[v]
            bw[o] += c[v]
            cur += neg_gain
            seq.append(v)
            key = (cur, float(max(bw)))
            if key < best:
                best = key
                best_len = len(seq)
                since_best = 0
            else:
                since_best += 1
            for i in range(off[v], off[v + 1]):
                t = nbr[i]
                wt = w[i]
                if block[t] == o:
                    # Gain of t worsened; its stale entry corrects on pop.
                    across[t] -= wt
                else:
                    across[t] += wt
                    if not moved[t]:
                        heapq.heappush(
                            heap, (wdeg[t] - 2.0 * across[t], stamp, t))
                        stamp += 1
            across[v] = wdeg[v] - across[v]

        for v in seq[best_len:]:
            o = block[v]
            b = 1 - o
            block[v] = b
            bw[o] -= c[v]
            bw[b] += c[v]
        if best[0] >= start_cut:
            break
    return Partition.from_blocks(g, block)


def partition_multilevel(g: Graph, cfg: PartitionConfig) -> Partition:
    """Full multilevel bipartition of a connected graph."""
    if not check_connected(g):
        raise ValueError("input graph must be connected")
    rng = random.Random(cfg.seed)
    total = int(g.vertex_c.sum())
    max_vertex_weight = 1.5 * total / max(cfg.coarsest_size, 1)

    levels: list[tuple[Graph, np.ndarray]] = []
    cur = g
    while cur.n > cfg.coarsest_size:
        rating = compute_rating(cur, cfg, rng.getrandbits(64))
        mate = greedy_matching(cur, rating, max_vertex_weight)
        coarse, cmap = contract(cur, mate)
        if coarse.n == cur.n:
            break
        shrink = cur.n / coarse.n
        levels.append((cur, cmap))
        cur = coarse
        if shrink < cfg.shrink_limit:
            break

    p = initial_bipartition(cur, cfg.epsilon, cfg.initial_attempts,
                            rng.getrandbits(64))
    p = fm_refine(cur, p, cfg.epsilon, cfg.max_fm_passes)
    for fine, cmap in reversed(levels):
        coarse_block = p.block
        fine_block = [coarse_block[x] for x in cmap.tolist()]
        p = Partition.from_blocks(fine, fine_block)
        p = fm_refine(fine, p, cfg.epsilon, cfg.max_fm_passes)
    if not is_balanced(g, p, cfg.epsilon):
        logger.warning("final partition violates the balance constraint "
                       "(infeasible vertex weights?)")
    return p
