"""Brute-force ground truth: exhaustive subset enumeration in increasing size.

Everything the specialized solvers claim is checked against these functions,
so they deliberately share nothing with the solvers beyond the closure
primitive.
"""

from __future__ import annotations

import os
from itertools import combinations

from .diffusion import reduce_for_removed_vertex, spread
from .errors import NoSolutionWithinCap, OracleLimitExceeded
from .graph import ThresholdedNetwork

__all__ = [
    "DEFAULT_LIMIT",
    "oracle_limit",
    "brute_force_min_seed",
    "enumerate_optimal_sets",
    "best_pendant_seed",
]

DEFAULT_LIMIT = 20


def oracle_limit() -> int:
    """Vertex limit; the ``TSS_ORACLE_LIMIT`` environment variable overrides the default 20."""
    raw = os.environ.get("TSS_ORACLE_LIMIT")
    return int(raw) if raw else DEFAULT_LIMIT


def _check_limit(net: ThresholdedNetwork, limit: int | None) -> None:
    lim = oracle_limit() if limit is None else limit
    if net.n > lim:
        raise OracleLimitExceeded(f"oracle limited to n <= {lim}, got n = {net.n}")


def _forced(net: ThresholdedNetwork) -> list[int]:
    # a vertex needing more active neighbors than it has can only be a seed
    return [v for v in range(net.n) if net.theta[v] > len(net.adj[v])]


def _candidates(net: ThresholdedNetwork, prune: bool):
    forced = _forced(net) if prune else []
    fset = set(forced)
    free = [v for v in range(net.n) if v not in fset]
    return forced, free


def _sets_of_size(forced: list[int], free: list[int], k: int):
    extra = k - len(forced)
    if extra < 0 or extra > len(free):
        return
    # combinations of `free` in lexicographic order yield lexicographically ordered unions
    for combo in combinations(free, extra):
        yield tuple(sorted((*forced, *combo)))


def brute_force_min_seed(
    net: ThresholdedNetwork,
    cap: int | None = None,
    *,
    prune: bool = True,
    limit: int | None = None,
) -> tuple[int, frozenset[int]]:
    """Exact min-seed and the lexicographically first optimal target set.

    Subsets are enumerated by increasing size, lexicographically within a
    size. With ``prune`` (default) vertices whose threshold exceeds their
    degree are placed in every candidate.

    Raises
    ------
    NoSolutionWithinCap
        If no target set of size ``<= cap`` exists.
    OracleLimitExceeded
        If ``net.n`` exceeds the configured limit.
    """
    _check_limit(net, limit)
    adj, theta = net.adj, net.theta
    forced, free = _candidates(net, prune)
    top = net.n if cap is None else min(cap, net.n)
    for k in range(len(forced), top + 1):
        for seed in _sets_of_size(forced, free, k):
            if all(spread(adj, theta, seed)):
                return k, frozenset(seed)
    raise NoSolutionWithinCap(f"no target set of size <= {top}")


def enumerate_optimal_sets(
    net: ThresholdedNetwork, *, limit: int | None = None
) -> list[frozenset[int]]:
    """All minimum-size target sets, in lexicographic order."""
    k, _ = brute_force_min_seed(net, limit=limit)
    adj, theta = net.adj, net.theta
    forced, free = _candidates(net, True)
    return [
        frozenset(seed)
        for seed in _sets_of_size(forced, free, k)
        if all(spread(adj, theta, seed))
    ]


def best_pendant_seed(
    net: ThresholdedNetwork, v: int, *, limit: int | None = None
) -> tuple[frozenset[int], int]:
    """Optimal target set of ``(G - v, theta_1)`` maximizing activated neighbors of ``v``.

    ``theta_1`` lowers every neighbor of ``v`` by one. The gain is
    ``|N(v) & closure_G(S)|`` with the closure taken in ``G`` under the
    original thresholds. Returns the lexicographically first maximizer, with
    vertex ids of ``net``.
    """
    reduced, old_ids = reduce_for_removed_vertex(net, v)
    nbrs = net.adj[v]
    best: tuple[frozenset[int], int] | None = None
    for local in enumerate_optimal_sets(reduced, limit=limit):
        seed = frozenset(old_ids[x] for x in local)
        act = spread(net.adj, net.theta, seed)
        gain = sum(act[w] for w in nbrs)
        if best is None or gain > best[1]:
            best = (seed, gain)
    assert best is not None
    return best
