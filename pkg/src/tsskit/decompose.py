"""Pendant-block peeling shared by the block-cactus and chordal solvers.

A pendant block ``G1`` hanging off cut vertex ``v`` is solved locally for
``(G1 - v, theta_1)``, choosing among optimal local seeds one that activates
as many neighbors of ``v`` inside ``G1`` as possible. That count (the gain)
is subtracted from ``theta(v)`` and peeling continues on the rest of the
graph. The union of local seeds is optimal for the whole network.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from typing import Callable

from .diffusion import is_target_set
from .graph import BlockCutTree, ThresholdedNetwork, induced_subnetwork

__all__ = ["BlockStep", "SolveReport", "peel_blocks", "single_vertex_seed"]


@dataclass(frozen=True)
class BlockStep:
    """One peeling step. ``cut`` is ``None`` for the root block.

    ``block`` holds sorted global ids; ``local_seed`` is in global ids too.
    ``theta_cut`` is the cut vertex threshold the step saw before reduction.
    """

    block: tuple[int, ...]
    cut: int | None
    kind: str
    local_seed: frozenset[int]
    gain: int
    theta_cut: int | None = None


@dataclass(frozen=True)
class SolveReport:
    seed: frozenset[int]
    size: int
    solver: str
    per_block_trace: tuple[BlockStep, ...]
    verified: bool

    def sorted_seed(self) -> list[int]:
        return sorted(self.seed)


PendantFn = Callable[[ThresholdedNetwork, int, str], "tuple[frozenset[int], int]"]
RootFn = Callable[[ThresholdedNetwork, str], frozenset[int]]


def single_vertex_seed(theta: int) -> frozenset[int]:
    """Seed for a one-vertex network: empty when it activates on its own."""
    return frozenset() if theta <= 0 else frozenset({0})


def peel_blocks(
    net: ThresholdedNetwork,
    bct: BlockCutTree,
    kinds: list[str],
    pendant: PendantFn,
    root: RootFn,
    solver: str,
    verify: bool = True,
) -> SolveReport:
    theta = list(net.theta)
    seed: set[int] = set()
    trace: list[BlockStep] = []
    for b, cut in bct.processing_order:
        sub, old_ids = induced_subnetwork(net, bct.blocks[b], bct.block_edges[b], theta)
        if cut is None:
            local = root(sub, kinds[b])
            gain, theta_cut = 0, None
        else:
            theta_cut = theta[cut]
            local, gain = pendant(sub, bisect_left(old_ids, cut), kinds[b])
            theta[cut] -= gain
        glob = frozenset(old_ids[x] for x in local)
        seed |= glob
        trace.append(BlockStep(old_ids, cut, kinds[b], glob, gain, theta_cut))
    frozen = frozenset(seed)
    ok = is_target_set(net, frozen) if verify else True
    return SolveReport(frozen, len(frozen), solver, tuple(trace), ok)
