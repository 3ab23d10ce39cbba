"""Solver dispatch by graph class."""

from __future__ import annotations

from .blockcactus import solve_block_cactus
from .chordal import solve_chordal
from .decompose import SolveReport
from .errors import WrongClassError
from .graph import GraphClass, ThresholdedNetwork, classify_graph
from .hamming import HammingSpec, closure_subcubes, encode, optimal_seed

__all__ = ["solve", "solve_hamming"]

_METHODS = ("auto", "block-cactus", "chordal", "hamming")


def solve_hamming(spec: HammingSpec, net: ThresholdedNetwork | None = None) -> SolveReport:
    """Constructed optimal seed for a threshold-2 Hamming graph.

    Verified with the subcube algebra, so this works for graphs far too
    large to materialize. ``net`` (if given) must carry threshold 2 everywhere.
    """
    if net is not None and any(t != 2 for t in net.theta):
        raise WrongClassError("the Hamming construction is only optimal for threshold 2 everywhere")
    tuples = optimal_seed(spec)
    verified = closure_subcubes(spec, tuples).covers_everything()
    seed = frozenset(encode(spec, x) for x in tuples)
    return SolveReport(seed, len(seed), "hamming", (), verified)


def solve(
    net: ThresholdedNetwork, method: str = "auto", hamming: HammingSpec | None = None
) -> SolveReport:
    """Run the exact solver matching ``method``; ``auto`` classifies the graph first.

    General graphs raise :class:`WrongClassError`: the problem is NP-hard
    there and no exact polynomial routine is provided.
    """
    if method not in _METHODS:
        raise ValueError(f"unknown method {method!r}; choose from {', '.join(_METHODS)}")
    uniform_two = all(t == 2 for t in net.theta)
    if method == "hamming" or (method == "auto" and hamming is not None and uniform_two):
        if hamming is None:
            raise WrongClassError("hamming solver needs a 'hamming' declaration in the instance")
        return solve_hamming(hamming, net)
    if method == "block-cactus":
        return solve_block_cactus(net)
    if method == "chordal":
        return solve_chordal(net)
    cls = classify_graph(net)
    if cls is GraphClass.BLOCK_CACTUS:
        return solve_block_cactus(net)
    if cls is GraphClass.CHORDAL_THETA_LE2:
        return solve_chordal(net)
    raise WrongClassError(
        "graph is neither block-cactus nor chordal with thresholds <= 2; "
        "target set selection is NP-hard in general (use the oracle for small graphs)"
    )
