"""Exact target sets for chordal graphs whose thresholds are at most 2.

Inside a 2-connected chordal block with thresholds <= 2, any active edge
activates the whole block. That makes every pendant block a constant-size
case analysis: the local optimum is either empty or a single vertex, and the
question is only which vertex and how many of the cut vertex's neighbors end
up active.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .blockcactus import pendant_complete_solve
from .decompose import SolveReport, peel_blocks, single_vertex_seed
from .diffusion import spread
from .errors import WrongClassError, WrongThresholdsError
from .graph import BlockClass, ThresholdedNetwork, block_cut_tree, recognize_chordal

__all__ = [
    "ChordalBlockAnalysis",
    "analyze_block",
    "pendant_case",
    "pendant_chordal_solve",
    "base_2connected_chordal_solve",
    "solve_chordal",
]


@dataclass(frozen=True)
class ChordalBlockAnalysis:
    """Threshold bookkeeping for one block, optionally relative to a cut vertex ``v``.

    ``I``: vertices of ``G - v`` whose reduced threshold is <= 0.
    ``J``: vertices with threshold < 2; ``J0``: threshold <= 0.
    ``P1``/``Q1``: two members of ``I``/``J0`` lie within distance 2.
    ``P2``/``Q2``: a member of ``I``/``J0`` is adjacent to a vertex needing exactly 1.
    """

    v: int | None
    I: frozenset[int]
    J: frozenset[int]
    J0: frozenset[int]
    P1: bool
    P2: bool
    Q1: bool
    Q2: bool


def _check_thresholds(theta: Sequence[int]) -> None:
    worst = max(theta, default=0)
    if worst > 2:
        raise WrongThresholdsError(f"chordal solver needs thresholds <= 2, found {worst}")


def _within_two(adj: Sequence[Sequence[int]], members: Iterable[int]) -> bool:
    """Do two distinct members have intersecting closed neighborhoods?

    Each vertex is marked at most once per member, so this is linear in the
    total degree of the members.
    """
    owner: dict[int, int] = {}
    for x in members:
        for z in (x, *adj[x]):
            prev = owner.get(z)
            if prev is None:
                owner[z] = x
            elif prev != x:
                return True
    return False


def analyze_block(block: ThresholdedNetwork, v: int | None = None) -> ChordalBlockAnalysis:
    """Compute I, J, J0 and the four proximity flags for a block.

    Distances for P1 are measured in the whole block, ``v`` included.
    """
    _check_thresholds(block.theta)
    adj, theta = block.adj, block.theta
    J = frozenset(u for u in range(block.n) if theta[u] < 2)
    J0 = frozenset(u for u in J if theta[u] <= 0)
    Q1 = _within_two(adj, sorted(J0))
    Q2 = any(theta[y] == 1 for x in J0 for y in adj[x])

    if v is None:
        return ChordalBlockAnalysis(None, frozenset(), J, J0, False, False, Q1, Q2)

    nv = set(adj[v])
    reduced = [t - 1 if u in nv else t for u, t in enumerate(theta)]
    I = frozenset(u for u in range(block.n) if u != v and reduced[u] <= 0)
    P1 = _within_two(adj, sorted(I))
    P2 = any(y != v and reduced[y] == 1 for x in I for y in adj[x])
    return ChordalBlockAnalysis(v, I, J, J0, P1, P2, Q1, Q2)


def pendant_case(analysis: ChordalBlockAnalysis, block: ThresholdedNetwork) -> str:
    """Which of the cases a-e applies, checked in that order."""
    v = analysis.v
    if v is None:
        raise ValueError("pendant analysis needs a cut vertex")
    if analysis.I & set(block.adj[v]):
        return "a"
    if analysis.P1:
        return "b"
    if analysis.P2:
        return "c"
    if not analysis.J:
        return "d"
    return "e"


def _neighbor_of_any(adj: Sequence[Sequence[int]], members: Iterable[int], exclude: int | None) -> int:
    return min(x for w in members for x in adj[w] if x != exclude)


def pendant_chordal_solve(block: ThresholdedNetwork, v: int) -> tuple[frozenset[int], int]:
    """Best local seed and gain for a 2-connected chordal pendant block at ``v``.

    Cases a-c need no seed; case d (all thresholds 2) seeds the smallest
    neighbor of ``v``; case e seeds the smallest neighbor of a vertex with
    threshold below 2. The gain is always measured by simulation.
    """
    analysis = analyze_block(block, v)
    case = pendant_case(analysis, block)
    if case in ("a", "b", "c"):
        seed = frozenset()
    elif case == "d":
        seed = frozenset({min(block.adj[v])})
    else:
        seed = frozenset({_neighbor_of_any(block.adj, analysis.J, v)})
    act = spread(block.adj, block.theta, seed)
    return seed, sum(act[w] for w in block.adj[v])


def base_2connected_chordal_solve(block: ThresholdedNetwork) -> frozenset[int]:
    """Optimal seed for a stand-alone 2-connected chordal block (size 0, 1 or 2)."""
    if block.n < 3:
        raise ValueError("blocks with fewer than 3 vertices belong to the complete-block routines")
    analysis = analyze_block(block)
    if analysis.Q1 or analysis.Q2:
        return frozenset()
    if analysis.J:
        return frozenset({_neighbor_of_any(block.adj, sorted(analysis.J), None)})
    return frozenset({0, block.adj[0][0]})


def _edge_root(sub: ThresholdedNetwork) -> frozenset[int]:
    for k in range(3):
        for combo in combinations(range(2), k):
            if all(spread(sub.adj, sub.theta, combo)):
                return frozenset(combo)
    raise AssertionError("both endpoints seeded must cover an edge")


def _pendant(sub: ThresholdedNetwork, v: int, kind: str) -> tuple[frozenset[int], int]:
    if kind == BlockClass.EDGE:
        return pendant_complete_solve(sub, v)
    return pendant_chordal_solve(sub, v)


def _root(sub: ThresholdedNetwork, kind: str) -> frozenset[int]:
    if sub.n == 1:
        return single_vertex_seed(sub.theta[0])
    if kind == BlockClass.EDGE:
        return _edge_root(sub)
    return base_2connected_chordal_solve(sub)


def solve_chordal(net: ThresholdedNetwork, *, verify: bool = True) -> SolveReport:
    """Optimal target set of a connected chordal network with thresholds <= 2.

    Raises
    ------
    WrongThresholdsError
        If some threshold exceeds 2.
    WrongClassError
        If the graph is not chordal.
    """
    _check_thresholds(net.theta)
    result = recognize_chordal(net)
    if not result:
        raise WrongClassError(f"graph is not chordal: induced cycle {list(result.witness)}")
    bct = block_cut_tree(net)
    kinds = [
        BlockClass.COMPLETE if len(b) == 1
        else BlockClass.EDGE if len(b) == 2
        else BlockClass.TWO_CONNECTED_CHORDAL
        for b in bct.blocks
    ]
    return peel_blocks(net, bct, kinds, _pendant, _root, "chordal", verify)
