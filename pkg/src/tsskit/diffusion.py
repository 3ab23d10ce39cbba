"""The threshold activation process and the threshold reductions built on it."""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Sequence

from .errors import GraphInputError
from .graph import ThresholdedNetwork

__all__ = [
    "ActivationResult",
    "closure",
    "closure_sequential",
    "is_target_set",
    "spread",
    "reduce_for_removed_vertex",
    "reduce_cut_threshold",
]


@dataclass(frozen=True)
class ActivationResult:
    """Outcome of one activation process.

    ``round_of`` maps every active vertex to the step at which it became
    active (0 for seeds). ``convinced_sequence`` lists the non-seed active
    vertices in activation order.
    """

    active: frozenset[int]
    round_of: Mapping[int, int]
    convinced_sequence: tuple[int, ...]

    @property
    def rounds(self) -> int:
        return max(self.round_of.values(), default=0)


def _seed_list(net: ThresholdedNetwork, seeds: Iterable[int]) -> list[int]:
    out = sorted(set(seeds))
    if out and (out[0] < 0 or out[-1] >= net.n):
        raise GraphInputError(f"seed set contains ids outside 0..{net.n - 1}")
    return out


def spread(adj: Sequence[Sequence[int]], theta: Sequence[int], seeds: Iterable[int]) -> bytearray:
    """Bare-bones parallel closure: returns a 0/1 activity flag per vertex.

    Used in hot loops (oracle enumeration, gain evaluation) where the full
    :class:`ActivationResult` bookkeeping is wasted.
    """
    n = len(adj)
    active = bytearray(n)
    need = list(theta)
    stack = []
    for s in seeds:
        if not active[s]:
            active[s] = 1
            stack.append(s)
    for v in range(n):
        if not active[v] and need[v] <= 0:
            active[v] = 1
            stack.append(v)
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if not active[w]:
                need[w] -= 1
                if need[w] <= 0:
                    active[w] = 1
                    stack.append(w)
    return active


def closure(net: ThresholdedNetwork, seeds: Iterable[int]) -> ActivationResult:
    """Run the parallel updating rule from ``seeds`` to its fixpoint.

    Each round activates every inactive vertex with at least ``theta(v)``
    neighbors active at the end of the previous round. Vertices with
    ``theta <= 0`` that are not seeds activate in round 1. Work is O(n + m)
    via per-vertex "remaining need" counters.

    >>> from tsskit.graph import build_network
    >>> p3 = build_network(3, [(0, 1), (1, 2)], [1, 1, 1])
    >>> dict(closure(p3, {0}).round_of)
    {0: 0, 1: 1, 2: 2}
    """
    adj = net.adj
    need = list(net.theta)
    round_of: dict[int, int] = {}
    frontier = _seed_list(net, seeds)
    for s in frontier:
        round_of[s] = 0
    sequence: list[int] = []
    r = 0
    auto = [v for v in range(net.n) if need[v] <= 0 and v not in round_of]
    while frontier or auto:
        nxt: list[int] = []
        for v in auto:
            if v not in round_of:
                round_of[v] = r + 1
                nxt.append(v)
        auto = []
        for u in frontier:
            for w in adj[u]:
                if w in round_of:
                    continue
                need[w] -= 1
                if need[w] <= 0:
                    round_of[w] = r + 1
                    nxt.append(w)
        nxt.sort()
        sequence.extend(nxt)
        frontier = nxt
        r += 1
    return ActivationResult(frozenset(round_of), round_of, tuple(sequence))


def closure_sequential(
    net: ThresholdedNetwork,
    seeds: Iterable[int],
    pick: Callable[[list[int]], int] | None = None,
) -> ActivationResult:
    """Sequential updating rule: exactly one eligible vertex activates per step.

    ``pick`` receives the sorted list of currently eligible vertices and
    returns one of them; the default takes the smallest id. ``round_of``
    records the step index, so the convinced sequence has one vertex per step.
    """
    adj = net.adj
    need = list(net.theta)
    round_of: dict[int, int] = {}
    seed_list = _seed_list(net, seeds)
    for s in seed_list:
        round_of[s] = 0
    for u in seed_list:
        for w in adj[u]:
            if w not in round_of:
                need[w] -= 1
    eligible = [v for v in range(net.n) if v not in round_of and need[v] <= 0]
    queued = set(eligible)
    if pick is None:
        heapq.heapify(eligible)
    sequence: list[int] = []
    step = 0
    while eligible:
        if pick is None:
            v = heapq.heappop(eligible)
        else:
            eligible.sort()
            v = pick(eligible)
            if v not in queued:
                raise ValueError(f"pick returned non-eligible vertex {v}")
            eligible.remove(v)
        step += 1
        round_of[v] = step
        sequence.append(v)
        for w in adj[v]:
            if w in round_of:
                continue
            need[w] -= 1
            if need[w] <= 0 and w not in queued:
                queued.add(w)
                if pick is None:
                    heapq.heappush(eligible, w)
                else:
                    eligible.append(w)
    return ActivationResult(frozenset(round_of), round_of, tuple(sequence))


def is_target_set(net: ThresholdedNetwork, seeds: Iterable[int]) -> bool:
    """True iff the closure of ``seeds`` is every vertex."""
    seeds = _seed_list(net, seeds)
    return all(spread(net.adj, net.theta, seeds))


def reduce_for_removed_vertex(
    net: ThresholdedNetwork, v: int
) -> tuple[ThresholdedNetwork, tuple[int, ...]]:
    """Build ``G - v`` with each former neighbor of ``v`` needing one activation fewer.

    Returns ``(reduced, old_ids)``; ``old_ids[i]`` is the original id of the
    reduced network's vertex ``i`` (order preserving).
    """
    if not 0 <= v < net.n:
        raise GraphInputError(f"vertex {v} out of range")
    old_ids = tuple(x for x in range(net.n) if x != v)
    shift = lambda x: x if x < v else x - 1  # noqa: E731
    nbr_of_v = set(net.adj[v])
    adj = tuple(tuple(shift(w) for w in net.adj[x] if w != v) for x in old_ids)
    theta = tuple(net.theta[x] - 1 if x in nbr_of_v else net.theta[x] for x in old_ids)
    return ThresholdedNetwork(net.n - 1, adj, theta), old_ids


def reduce_cut_threshold(net: ThresholdedNetwork, v: int, gain: int) -> ThresholdedNetwork:
    """Lower ``theta(v)`` by ``gain`` (the activated neighbors a peeled block contributes)."""
    if gain < 0:
        raise ValueError(f"gain must be nonnegative, got {gain}")
    if not 0 <= v < net.n:
        raise GraphInputError(f"vertex {v} out of range")
    theta = list(net.theta)
    theta[v] -= gain
    return net.with_theta(theta)
