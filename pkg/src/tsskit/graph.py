"""Graph substrate: thresholded networks, block-cut trees, block classes and chordality.

Vertices are always the integers ``0..n-1``. Networks are immutable; every
transformation returns a new object.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import DisconnectedGraphError, GraphInputError

__all__ = [
    "ThresholdedNetwork",
    "BlockCutTree",
    "BlockClass",
    "GraphClass",
    "PerfectEliminationOrder",
    "NotChordal",
    "build_network",
    "induced_subnetwork",
    "block_cut_tree",
    "classify_block",
    "recognize_chordal",
    "is_perfect_elimination_order",
    "classify_graph",
    "distance",
    "connected_components",
]


@dataclass(frozen=True, eq=True)
class ThresholdedNetwork:
    """A simple undirected graph with an integer threshold on every vertex.

    Use :func:`build_network` to construct one from an edge list; the raw
    constructor trusts its arguments.
    """

    n: int
    adj: tuple[tuple[int, ...], ...]
    theta: tuple[int, ...]

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once as ``(u, v)`` with ``u < v``, in lexicographic order."""
        for u, nbrs in enumerate(self.adj):
            for w in nbrs:
                if u < w:
                    yield (u, w)

    def with_theta(self, theta: Sequence[int]) -> "ThresholdedNetwork":
        if len(theta) != self.n:
            raise GraphInputError(f"expected {self.n} thresholds, got {len(theta)}")
        return ThresholdedNetwork(self.n, self.adj, tuple(int(t) for t in theta))


def build_network(
    n: int,
    edges: Iterable[tuple[int, int]],
    theta: Mapping[int, int] | Sequence[int],
) -> ThresholdedNetwork:
    """Validate an edge list and thresholds and return a canonical network.

    ``theta`` may be a sequence of length ``n`` or a mapping that covers every
    vertex. Self-loops, out-of-range ids, duplicate edges (in either
    orientation) and missing thresholds raise :class:`GraphInputError`.
    """
    if n < 0:
        raise GraphInputError(f"vertex count must be nonnegative, got {n}")
    nbrs: list[list[int]] = [[] for _ in range(n)]
    seen: set[tuple[int, int]] = set()
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphInputError(f"edge ({u}, {v}) has a vertex id outside 0..{n - 1}")
        if u == v:
            raise GraphInputError(f"self-loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise GraphInputError(f"duplicate edge ({u}, {v})")
        seen.add(key)
        nbrs[u].append(v)
        nbrs[v].append(u)

    if isinstance(theta, Mapping):
        missing = [v for v in range(n) if v not in theta]
        if missing:
            raise GraphInputError(f"missing threshold for vertex {missing[0]}")
        extra = [v for v in theta if not (isinstance(v, int) and 0 <= v < n)]
        if extra:
            raise GraphInputError(f"threshold given for unknown vertex {extra[0]!r}")
        th = tuple(int(theta[v]) for v in range(n))
    else:
        if len(theta) != n:
            raise GraphInputError(
                f"missing threshold for vertex {len(theta)}"
                if len(theta) < n
                else f"{len(theta)} thresholds for {n} vertices"
            )
        th = tuple(int(t) for t in theta)

    return ThresholdedNetwork(n, tuple(tuple(sorted(a)) for a in nbrs), th)


def induced_subnetwork(
    net: ThresholdedNetwork,
    vertices: Iterable[int],
    edges: Iterable[tuple[int, int]] | None = None,
    theta: Sequence[int] | None = None,
) -> tuple[ThresholdedNetwork, tuple[int, ...]]:
    """Return ``(sub, old_ids)`` where ``sub`` is induced on ``vertices``.

    Local ids follow increasing global id, so ``old_ids[i]`` is the global id
    of local vertex ``i`` and lexicographic order is preserved. When ``edges``
    is given it must be exactly the edge set of the induced subgraph (saves a
    scan of high-degree vertices). ``theta`` overrides ``net.theta`` globally.
    """
    old_ids = tuple(sorted(vertices))
    local = {g: i for i, g in enumerate(old_ids)}
    nbrs: list[list[int]] = [[] for _ in old_ids]
    if edges is None:
        for i, g in enumerate(old_ids):
            nbrs[i] = [local[w] for w in net.adj[g] if w in local]
    else:
        for a, b in edges:
            la, lb = local[a], local[b]
            nbrs[la].append(lb)
            nbrs[lb].append(la)
        for lst in nbrs:
            lst.sort()
    src = net.theta if theta is None else theta
    return (
        ThresholdedNetwork(len(old_ids), tuple(tuple(a) for a in nbrs), tuple(src[g] for g in old_ids)),
        old_ids,
    )


def connected_components(net: ThresholdedNetwork) -> list[list[int]]:
    comp = [-1] * net.n
    out: list[list[int]] = []
    for s in range(net.n):
        if comp[s] != -1:
            continue
        cid = len(out)
        comp[s] = cid
        members = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in net.adj[u]:
                if comp[w] == -1:
                    comp[w] = cid
                    members.append(w)
                    queue.append(w)
        out.append(members)
    return out


# --------------------------------------------------------------------------
# block-cut tree
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class BlockCutTree:
    """Blocks, cut vertices, their incidence, and a pendant-first peeling order.

    ``processing_order`` is a tuple of ``(block_index, cut_vertex)`` pairs;
    each named block has exactly one remaining cut vertex when it is peeled,
    and the final entry is the root block with ``cut_vertex = None``.
    """

    blocks: tuple[frozenset[int], ...]
    block_edges: tuple[tuple[tuple[int, int], ...], ...]
    cut_vertices: frozenset[int]
    block_cuts: tuple[tuple[int, ...], ...]
    cut_blocks: Mapping[int, tuple[int, ...]]
    processing_order: tuple[tuple[int, int | None], ...]

    @property
    def incidence(self) -> dict[int, tuple[int, ...]]:
        """Bipartite adjacency keyed by block index (cut vertices of each block)."""
        return {b: cuts for b, cuts in enumerate(self.block_cuts)}


def _biconnected_blocks(net: ThresholdedNetwork) -> tuple[list[list[tuple[int, int]]], list[int]]:
    """Iterative Hopcroft-Tarjan. Returns edge lists per block and DFS discovery marks."""
    n, adj = net.n, net.adj
    disc = [-1] * n
    low = [0] * n
    blocks: list[list[tuple[int, int]]] = []
    if n == 0:
        return blocks, disc
    disc[0] = low[0] = 0
    clock = 1
    stack: list[tuple[int, int, Iterator[int]]] = [(0, -1, iter(adj[0]))]
    estack: list[tuple[int, int]] = []
    while stack:
        u, parent, it = stack[-1]
        descended = False
        for w in it:
            if disc[w] == -1:
                disc[w] = low[w] = clock
                clock += 1
                estack.append((u, w))
                stack.append((w, u, iter(adj[w])))
                descended = True
                break
            if w != parent and disc[w] < disc[u]:
                estack.append((u, w))
                if disc[w] < low[u]:
                    low[u] = disc[w]
        if descended:
            continue
        stack.pop()
        if not stack:
            break
        p = stack[-1][0]
        if low[u] < low[p]:
            low[p] = low[u]
        if low[u] >= disc[p]:
            comp: list[tuple[int, int]] = []
            while True:
                e = estack.pop()
                comp.append(e if e[0] < e[1] else (e[1], e[0]))
                if e == (p, u):
                    break
            comp.sort()
            blocks.append(comp)
    return blocks, disc


def block_cut_tree(net: ThresholdedNetwork) -> BlockCutTree:
    """Decompose a connected network into blocks and compute the peeling order.

    Pendant blocks are peeled smallest-minimum-vertex-id first; the last
    remaining block is the root.

    Raises
    ------
    DisconnectedGraphError
        If ``net`` has more than one connected component.

    Examples
    --------
    >>> bowtie = build_network(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)], [2] * 5)
    >>> sorted(map(sorted, block_cut_tree(bowtie).blocks))
    [[0, 1, 2], [2, 3, 4]]
    """
    if net.n == 0:
        raise GraphInputError("empty network has no block decomposition")
    edge_blocks, disc = _biconnected_blocks(net)
    for v in range(net.n):
        if disc[v] == -1:
            raise DisconnectedGraphError(0, v)

    if net.n == 1:
        blocks = [frozenset({0})]
        edge_blocks = [[]]
    else:
        blocks = [frozenset(x for e in eb for x in e) for eb in edge_blocks]

    containing: dict[int, list[int]] = {}
    for b, verts in enumerate(blocks):
        for x in verts:
            containing.setdefault(x, []).append(b)
    cut_blocks = {x: tuple(bs) for x, bs in containing.items() if len(bs) > 1}
    cuts = frozenset(cut_blocks)
    block_cuts = [tuple(sorted(x for x in verts if x in cuts)) for verts in blocks]

    order = _peel_order(blocks, block_cuts, cut_blocks)
    return BlockCutTree(
        blocks=tuple(blocks),
        block_edges=tuple(tuple(eb) for eb in edge_blocks),
        cut_vertices=cuts,
        block_cuts=tuple(block_cuts),
        cut_blocks=cut_blocks,
        processing_order=order,
    )


def _peel_order(
    blocks: list[frozenset[int]],
    block_cuts: list[tuple[int, ...]],
    cut_blocks: Mapping[int, tuple[int, ...]],
) -> tuple[tuple[int, int | None], ...]:
    nb = len(blocks)
    alive_cuts = [len(c) for c in block_cuts]
    cut_count = {x: len(bs) for x, bs in cut_blocks.items()}
    removed = [False] * nb
    key = [min(b) for b in blocks]
    heap = [(key[b], b) for b in range(nb) if alive_cuts[b] <= 1]
    heapq.heapify(heap)
    queued = [alive_cuts[b] <= 1 for b in range(nb)]
    remaining = nb
    order: list[tuple[int, int | None]] = []
    while heap:
        _, b = heapq.heappop(heap)
        if remaining == 1:
            order.append((b, None))
            break
        cut = next(x for x in block_cuts[b] if cut_count[x] > 1)
        order.append((b, cut))
        removed[b] = True
        remaining -= 1
        cut_count[cut] -= 1
        if cut_count[cut] == 1:
            other = next(o for o in cut_blocks[cut] if not removed[o])
            alive_cuts[other] -= 1
            if alive_cuts[other] <= 1 and not queued[other]:
                queued[other] = True
                heapq.heappush(heap, (key[other], other))
    return tuple(order)


# --------------------------------------------------------------------------
# chordality
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class PerfectEliminationOrder:
    order: tuple[int, ...]

    def __bool__(self) -> bool:
        return True


@dataclass(frozen=True)
class NotChordal:
    """Negative answer carrying an induced cycle of length at least four."""

    witness: tuple[int, ...]

    def __bool__(self) -> bool:
        return False


def _mcs_visit_order(adj: Sequence[Sequence[int]]) -> list[int]:
    n = len(adj)
    weight = [0] * n
    done = [False] * n
    buckets: list[dict[int, None]] = [dict.fromkeys(range(n))] + [{} for _ in range(n)]
    top = 0
    visit: list[int] = []
    for _ in range(n):
        while not buckets[top]:
            top -= 1
        v = next(iter(buckets[top]))
        del buckets[top][v]
        done[v] = True
        visit.append(v)
        for w in adj[v]:
            if not done[w]:
                del buckets[weight[w]][w]
                weight[w] += 1
                buckets[weight[w]][w] = None
                if weight[w] > top:
                    top = weight[w]
    return visit


def _peo_violation(
    adj: Sequence[Sequence[int]], order: Sequence[int], adjset: list[set[int]]
) -> tuple[int, int, int] | None:
    """Return ``(v, p, u)`` where later neighbors ``p``, ``u`` of ``v`` are nonadjacent."""
    pos = [0] * len(adj)
    for i, v in enumerate(order):
        pos[v] = i
    for v in order:
        later = [w for w in adj[v] if pos[w] > pos[v]]
        if len(later) < 2:
            continue
        p = min(later, key=pos.__getitem__)
        ps = adjset[p]
        for u in later:
            if u != p and u not in ps:
                return (v, p, u)
    return None


def is_perfect_elimination_order(net: ThresholdedNetwork, order: Sequence[int]) -> bool:
    """Check that each vertex's later neighbors form a clique."""
    if sorted(order) != list(range(net.n)):
        return False
    adjset = [set(a) for a in net.adj]
    return _peo_violation(net.adj, order, adjset) is None


def _chordless_path(adj, adjset, x: int, a: int, b: int) -> list[int] | None:
    """Shortest a-b path avoiding the closed neighborhood of x except a and b."""
    blocked = set(adjset[x])
    blocked.add(x)
    blocked.discard(a)
    blocked.discard(b)
    prev = {a: -1}
    queue = deque([a])
    while queue:
        u = queue.popleft()
        if u == b:
            path = [b]
            while prev[path[-1]] != -1:
                path.append(prev[path[-1]])
            return path[::-1]
        for w in adj[u]:
            if w not in prev and w not in blocked:
                prev[w] = u
                queue.append(w)
    return None


def _induced_cycle(adj, adjset, hint: tuple[int, int, int]) -> tuple[int, ...]:
    v, p, u = hint
    path = _chordless_path(adj, adjset, v, p, u)
    if path is not None:
        return (v, *path)
    for x in range(len(adj)):
        nb = adj[x]
        for i, a in enumerate(nb):
            for b in nb[i + 1:]:
                if b in adjset[a]:
                    continue
                path = _chordless_path(adj, adjset, x, a, b)
                if path is not None:
                    return (x, *path)
    raise AssertionError("PEO verification failed but no induced cycle found")


def recognize_chordal(net: ThresholdedNetwork) -> PerfectEliminationOrder | NotChordal:
    """Maximum cardinality search followed by a clique check of the resulting order.

    Returns a verified :class:`PerfectEliminationOrder`, or :class:`NotChordal`
    whose ``witness`` lists the vertices of an induced cycle of length >= 4 in
    cyclic order. Both results are truthy/falsy accordingly.
    """
    visit = _mcs_visit_order(net.adj)
    order = visit[::-1]
    adjset = [set(a) for a in net.adj]
    bad = _peo_violation(net.adj, order, adjset)
    if bad is None:
        return PerfectEliminationOrder(tuple(order))
    return NotChordal(_induced_cycle(net.adj, adjset, bad))


# --------------------------------------------------------------------------
# classification
# --------------------------------------------------------------------------


class BlockClass(str, Enum):
    EDGE = "Edge"
    COMPLETE = "Complete"
    CYCLE = "Cycle"
    TWO_CONNECTED_CHORDAL = "TwoConnectedChordal"
    OTHER = "Other"


class GraphClass(str, Enum):
    BLOCK_CACTUS = "block-cactus"
    CHORDAL_THETA_LE2 = "chordal"
    GENERAL = "general"


def _block_edges(net: ThresholdedNetwork, block: frozenset[int]) -> list[tuple[int, int]]:
    return [(u, w) for u in sorted(block) for w in net.adj[u] if u < w and w in block]


def classify_block(
    net: ThresholdedNetwork,
    block: Iterable[int],
    edges: Sequence[tuple[int, int]] | None = None,
) -> BlockClass:
    """Most specific class of a block: Edge, Complete, Cycle, TwoConnectedChordal, Other.

    A triangle is Complete (not Cycle); a single-vertex block is Complete.
    """
    block = frozenset(block)
    k = len(block)
    if k == 2:
        return BlockClass.EDGE
    if k <= 1:
        return BlockClass.COMPLETE
    if edges is None:
        edges = _block_edges(net, block)
    e = len(edges)
    if e == k * (k - 1) // 2:
        return BlockClass.COMPLETE
    if e == k:
        deg = dict.fromkeys(block, 0)
        for a, b in edges:
            deg[a] += 1
            deg[b] += 1
        if all(d == 2 for d in deg.values()):
            return BlockClass.CYCLE
    sub, _ = induced_subnetwork(net, block, edges)
    if recognize_chordal(sub):
        return BlockClass.TWO_CONNECTED_CHORDAL
    return BlockClass.OTHER


CACTUS_BLOCKS = frozenset({BlockClass.EDGE, BlockClass.COMPLETE, BlockClass.CYCLE})


def is_block_cactus(net: ThresholdedNetwork, bct: BlockCutTree | None = None) -> bool:
    bct = bct or block_cut_tree(net)
    for verts, edges in zip(bct.blocks, bct.block_edges):
        k, e = len(verts), len(edges)
        if k <= 2 or e == k * (k - 1) // 2:
            continue
        if classify_block(net, verts, edges) is not BlockClass.CYCLE:
            return False
    return True


def classify_graph(net: ThresholdedNetwork) -> GraphClass:
    """Dispatch class for the solvers; block-cactus wins when both special classes apply."""
    bct = block_cut_tree(net)
    if is_block_cactus(net, bct):
        return GraphClass.BLOCK_CACTUS
    if max(net.theta, default=0) <= 2 and recognize_chordal(net):
        return GraphClass.CHORDAL_THETA_LE2
    return GraphClass.GENERAL


def distance(net: ThresholdedNetwork, u: int, v: int) -> int | None:
    """BFS distance between ``u`` and ``v``; ``None`` when they are in different components."""
    if not (0 <= u < net.n and 0 <= v < net.n):
        raise GraphInputError(f"vertex out of range: {u}, {v}")
    if u == v:
        return 0
    dist = {u: 0}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for w in net.adj[x]:
            if w not in dist:
                if w == v:
                    return dist[x] + 1
                dist[w] = dist[x] + 1
                queue.append(w)
    return None
