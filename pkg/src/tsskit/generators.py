"""Seeded instance generators.

All randomness comes from :class:`SplitMix64`, whose recurrence is fixed so
that any reimplementation reproduces the same instances from the same seed:

    state  = (state + 0x9E3779B97F4A7C15) mod 2**64
    z      = state
    z      = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) mod 2**64
    z      = ((z ^ (z >> 27)) * 0x94D049BB133111EB) mod 2**64
    output = z ^ (z >> 31)

``below(k)`` draws uniformly from ``0..k-1`` by rejection on the top of the
64-bit range; ``unit()`` is ``next() >> 11`` scaled by ``2**-53``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import ThresholdedNetwork, build_network

__all__ = ["SplitMix64", "gen_block_cactus", "gen_chordal", "assign_thresholds"]

_MASK = (1 << 64) - 1


class SplitMix64:
    ALGORITHM = "splitmix64"

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, k: int) -> int:
        if k <= 0:
            raise ValueError("below() needs a positive bound")
        limit = (1 << 64) - ((1 << 64) % k)
        while True:
            x = self.next()
            if x < limit:
                return x % k

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in ``[lo, hi]`` inclusive."""
        return lo + self.below(hi - lo + 1)

    def unit(self) -> float:
        return (self.next() >> 11) * (1.0 / (1 << 53))

    def choice(self, seq: Sequence):
        return seq[self.below(len(seq))]

    def weighted(self, weights: Sequence[float]) -> int:
        x = self.unit() * sum(weights)
        for i, w in enumerate(weights):
            if x < w:
                return i
            x -= w
        return len(weights) - 1


@dataclass(frozen=True)
class ThresholdPolicy:
    """``uniform``: theta in [lo, deg + hi_offset]; ``constant``: theta = value everywhere."""

    kind: str = "uniform"
    value: int = 0
    lo: int = 0
    hi_offset: int = 1


def assign_thresholds(
    rng: SplitMix64, degrees: Sequence[int], policy: ThresholdPolicy
) -> list[int]:
    if policy.kind == "constant":
        return [policy.value] * len(degrees)
    if policy.kind == "uniform":
        return [rng.randint(policy.lo, d + policy.hi_offset) for d in degrees]
    raise ValueError(f"unknown threshold policy {policy.kind!r}")


def gen_block_cactus(
    rng: SplitMix64,
    blocks: int,
    min_size: int = 2,
    max_size: int = 5,
    cycle_fraction: float = 0.5,
    policy: ThresholdPolicy = ThresholdPolicy(),
) -> ThresholdedNetwork:
    """Random connected block-cactus network.

    Blocks are added one at a time; each new block (a clique, or a cycle with
    probability ``cycle_fraction`` when it has at least four vertices) is
    glued at a uniformly chosen existing vertex.
    """
    if blocks < 1 or min_size < 2 or max_size < min_size:
        raise ValueError("need blocks >= 1 and 2 <= min_size <= max_size")
    if not 0.0 <= cycle_fraction <= 1.0:
        raise ValueError("cycle_fraction must lie in [0, 1]")
    n = 0
    edges: list[tuple[int, int]] = []
    for b in range(blocks):
        size = rng.randint(min_size, max_size)
        if b == 0:
            members = list(range(size))
            n = size
        else:
            anchor = rng.below(n)
            members = [anchor, *range(n, n + size - 1)]
            n += size - 1
        if size >= 4 and rng.unit() < cycle_fraction:
            edges.extend((members[i], members[(i + 1) % size]) for i in range(size))
        else:
            edges.extend(
                (members[i], members[j]) for i in range(size) for j in range(i + 1, size)
            )
    deg = [0] * n
    for a, c in edges:
        deg[a] += 1
        deg[c] += 1
    return build_network(n, edges, assign_thresholds(rng, deg, policy))


def gen_chordal(
    rng: SplitMix64,
    n: int,
    width: int = 2,
    min_width: int = 1,
    theta_weights: Sequence[float] = (1.0, 1.0, 1.0),
    theta_const: int | None = None,
) -> ThresholdedNetwork:
    """Random connected chordal network built by reversing a perfect elimination order.

    Vertex ``v`` attaches to a clique: the first ``min_width + 1`` vertices
    form a clique, and every later vertex picks a recorded clique of size at
    least ``min_width`` and joins between ``min_width`` and ``width`` of its
    members. ``min_width >= t`` makes the result t-connected. Thresholds are
    ``theta_const`` if given, else drawn from ``0, 1, 2, ...`` with
    ``theta_weights``.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if min_width < 1 or width < min_width:
        raise ValueError("need 1 <= min_width <= width")
    edges: list[tuple[int, int]] = []
    cliques: list[tuple[int, ...]] = [(0,)]
    for v in range(1, n):
        if v <= min_width:
            attach = tuple(range(v))
        else:
            pool = [c for c in cliques if len(c) >= min_width]
            base = rng.choice(pool)
            size = rng.randint(min_width, min(width, len(base)))
            members = list(base)
            for i in range(size):
                j = i + rng.below(len(members) - i)
                members[i], members[j] = members[j], members[i]
            attach = tuple(sorted(members[:size]))
        edges.extend((u, v) for u in attach)
        cliques.append((*attach, v))
    if theta_const is not None:
        theta = [theta_const] * n
    else:
        theta = [rng.weighted(theta_weights) for _ in range(n)]
    return build_network(n, edges, theta)
