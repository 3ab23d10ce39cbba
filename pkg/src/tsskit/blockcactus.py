"""Exact target sets for block-cactus graphs (every block complete or a cycle)."""

from __future__ import annotations

from itertools import product
from typing import Sequence

from .decompose import SolveReport, peel_blocks, single_vertex_seed
from .diffusion import spread
from .errors import WrongClassError
from .graph import BlockClass, ThresholdedNetwork, block_cut_tree

__all__ = [
    "solve_block_cactus",
    "pendant_complete_solve",
    "complete_closure_size",
    "pendant_cycle_solve",
    "base_complete_solve",
    "base_cycle_solve",
    "cactus_block_kind",
]


def _bucket_sort(ids: Sequence[int], keys: Sequence[int], lo: int, hi: int) -> list[int]:
    """Stable counting sort of ``ids`` by ``keys`` clamped into ``[lo, hi]``."""
    buckets: list[list[int]] = [[] for _ in range(hi - lo + 1)]
    for x, k in zip(ids, keys):
        buckets[min(max(k, lo), hi) - lo].append(x)
    return [x for bucket in buckets for x in bucket]


def _algorithm_k(thresholds: Sequence[int], n: int) -> int:
    """Seed count for a clique, given nondecreasing thresholds of its ``n - 1`` candidates.

    Seeds are always the top ``s`` vertices of the order; the bottom ones are
    convinced in order, vertex ``i`` seeing ``s + i - 1`` active neighbors.
    """
    s = sum(1 for t in thresholds if t > n - 2)
    forced = s
    for i in range(1, n - forced):
        t = thresholds[i - 1]
        if t > s + i - 1:
            s += t - (s + i - 1)
        if n - s == i + 1:
            return s
    if n - forced > 1:
        raise AssertionError("clique seed loop ended without reaching its stop condition")
    return s


def complete_closure_size(sorted_thresholds: Sequence[int], s: int) -> int:
    """Number ``r`` of non-seeds activated in a clique holding ``s`` seeds.

    ``sorted_thresholds`` lists the non-seed thresholds in nondecreasing
    order; the closure is the seeds plus the first ``r`` of them.
    """
    for i, t in enumerate(sorted_thresholds, 1):
        if t > s + i - 1:
            return i - 1
    return len(sorted_thresholds)


def pendant_complete_solve(block: ThresholdedNetwork, v: int) -> tuple[frozenset[int], int]:
    """Best local seed and gain for a complete pendant block hanging at ``v``.

    Candidates ``G - v`` are ordered by reduced threshold (bucket sort, ties
    by id) and the top ``s`` become seeds. The gain is read off the closed
    form for clique closures instead of simulating.
    """
    n = block.n
    theta = block.theta
    others = [u for u in range(n) if u != v]
    reduced = [theta[u] - 1 for u in others]
    order = _bucket_sort(others, reduced, 0, max(n - 1, 0))
    s = _algorithm_k([theta[u] - 1 for u in order], n)
    seed = frozenset(order[len(order) - s:]) if s else frozenset()

    rest = [u for u in range(n) if u not in seed]
    rest = _bucket_sort(rest, [theta[u] for u in rest], 0, n)
    r = complete_closure_size([theta[u] for u in rest], s)
    gain = s + r - (1 if v in rest[:r] else 0)
    return seed, gain


def base_complete_solve(block: ThresholdedNetwork) -> frozenset[int]:
    """Optimal seed for a stand-alone clique: Algorithm K over all vertices."""
    n = block.n
    order = _bucket_sort(range(n), block.theta, 0, n)
    s = _algorithm_k([block.theta[u] for u in order], n + 1)
    return frozenset(order[n - s:]) if s else frozenset()


def _cycle_path(block: ThresholdedNetwork, v: int) -> list[int]:
    first = min(block.adj[v])
    path = [first]
    prev, cur = v, first
    while len(path) < block.n - 1:
        a, b = block.adj[cur]
        prev, cur = cur, (b if a == prev else a)
        path.append(cur)
    return path


def _component_candidates(comp: list[int], need: list[int]) -> list[frozenset[int]]:
    twos = [i for i in comp if need[i] == 2]
    if len(twos) % 2:
        return [frozenset(twos[0::2])]
    left = frozenset([comp[0], *twos[1::2]])
    right = frozenset([*twos[0::2], comp[-1]])
    return [left] if left == right else [left, right]


def pendant_cycle_solve(block: ThresholdedNetwork, v: int) -> tuple[frozenset[int], int]:
    """Best local seed and gain for a cycle pendant block hanging at ``v``.

    The residual path ``v_1 .. v_{k-1}`` starts at the smaller-id neighbor
    of ``v``. Forced seeds and everything they activate are found in two
    sweeps; each leftover path component has needs in {1, 2} and admits one
    or two canonical optimal seedings. Only the outermost components can
    influence ``v``'s neighbors, so at most four combinations are simulated.
    """
    path = _cycle_path(block, v)
    k = len(path)
    theta = block.theta
    need = [theta[x] for x in path]
    need[0] -= 1
    need[-1] -= 1
    deg = [2] * k
    deg[0] = deg[-1] = 1
    if k == 1:
        deg[0] = 0

    forced = [need[i] > deg[i] for i in range(k)]
    for i in range(k):
        if not forced[i]:
            need[i] -= (i > 0 and forced[i - 1]) + (i < k - 1 and forced[i + 1])
    for i in range(k - 1):
        if not forced[i] and need[i] <= 0:
            need[i + 1] -= 1
    for i in range(k - 1, 0, -1):
        if not forced[i] and need[i] <= 0:
            need[i - 1] -= 1

    base = frozenset(path[i] for i in range(k) if forced[i])
    comps: list[list[int]] = []
    current: list[int] = []
    for i in range(k):
        if forced[i] or need[i] <= 0:
            if current:
                comps.append(current)
                current = []
        else:
            current.append(i)
    if current:
        comps.append(current)

    if not comps:
        options = [frozenset()]
    elif len(comps) == 1:
        options = _component_candidates(comps[0], need)
    else:
        fixed = frozenset().union(*(_component_candidates(c, need)[0] for c in comps[1:-1]))
        options = [
            a | b | fixed
            for a, b in product(
                _component_candidates(comps[0], need), _component_candidates(comps[-1], need)
            )
        ]

    nbrs = block.adj[v]
    best: tuple[int, tuple[int, ...]] | None = None
    best_seed = frozenset()
    for opt in options:
        seed = base | frozenset(path[i] for i in opt)
        act = spread(block.adj, theta, seed)
        gain = sum(act[w] for w in nbrs)
        key = (-gain, tuple(sorted(seed)))
        if best is None or key < best:
            best, best_seed = key, seed
    assert best is not None
    return best_seed, -best[0]


def base_cycle_solve(block: ThresholdedNetwork) -> frozenset[int]:
    """Optimal seed for a stand-alone cycle.

    Anchor vertex 0: solve the rest as if 0 were a cut vertex glued to an
    empty remainder, then add 0 only when its activated neighbors do not
    reach its threshold.
    """
    seed, gain = pendant_cycle_solve(block, 0)
    return seed | single_vertex_seed(block.theta[0] - gain)


def cactus_block_kind(k: int, edges: Sequence[tuple[int, int]]) -> BlockClass:
    """Edge, Complete or Cycle from vertex and edge counts; Other otherwise."""
    if k <= 1:
        return BlockClass.COMPLETE
    if k == 2:
        return BlockClass.EDGE
    e = len(edges)
    if e == k * (k - 1) // 2:
        return BlockClass.COMPLETE
    if e == k:
        deg: dict[int, int] = {}
        for a, b in edges:
            deg[a] = deg.get(a, 0) + 1
            deg[b] = deg.get(b, 0) + 1
        if len(deg) == k and all(d == 2 for d in deg.values()):
            return BlockClass.CYCLE
    return BlockClass.OTHER


def _pendant(sub: ThresholdedNetwork, v: int, kind: str) -> tuple[frozenset[int], int]:
    if kind == BlockClass.CYCLE:
        return pendant_cycle_solve(sub, v)
    return pendant_complete_solve(sub, v)


def _root(sub: ThresholdedNetwork, kind: str) -> frozenset[int]:
    if sub.n == 1:
        return single_vertex_seed(sub.theta[0])
    if kind == BlockClass.CYCLE:
        return base_cycle_solve(sub)
    return base_complete_solve(sub)


def solve_block_cactus(net: ThresholdedNetwork, *, verify: bool = True) -> SolveReport:
    """Optimal target set of a connected block-cactus network.

    Raises
    ------
    WrongClassError
        If some block is neither complete nor a cycle.
    DisconnectedGraphError
        If the network is not connected.
    """
    bct = block_cut_tree(net)
    kinds = []
    for b, (verts, edges) in enumerate(zip(bct.blocks, bct.block_edges)):
        kind = cactus_block_kind(len(verts), edges)
        if kind is BlockClass.OTHER:
            raise WrongClassError(
                f"block {b} (vertices {sorted(verts)[:6]}...) is neither complete nor a cycle"
            )
        kinds.append(kind)
    return peel_blocks(net, bct, kinds, _pendant, _root, "block-cactus", verify)
