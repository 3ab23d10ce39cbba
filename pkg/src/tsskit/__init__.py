"""Exact target set selection on block-cactus graphs, chordal graphs with
thresholds at most 2, and Hamming graphs with threshold 2, plus a brute-force
oracle to check them against."""

from .blockcactus import solve_block_cactus
from .chordal import solve_chordal
from .decompose import SolveReport
from .diffusion import ActivationResult, closure, closure_sequential, is_target_set
from .errors import (
    DisconnectedGraphError,
    GraphInputError,
    NoSolutionWithinCap,
    OracleLimitExceeded,
    ParseError,
    TooLargeError,
    TSSError,
    WrongClassError,
    WrongThresholdsError,
)
from .graph import (
    BlockClass,
    GraphClass,
    ThresholdedNetwork,
    block_cut_tree,
    build_network,
    classify_block,
    classify_graph,
    recognize_chordal,
)
from .hamming import HammingSpec, closure_subcubes, min_seed_formula, optimal_seed
from .io import parse_instance, parse_network_file, serialize_network
from .oracle import best_pendant_seed, brute_force_min_seed
from .solve import solve

__version__ = "0.1.0"

__all__ = [
    "ActivationResult",
    "BlockClass",
    "DisconnectedGraphError",
    "GraphClass",
    "GraphInputError",
    "HammingSpec",
    "NoSolutionWithinCap",
    "OracleLimitExceeded",
    "ParseError",
    "SolveReport",
    "TSSError",
    "ThresholdedNetwork",
    "TooLargeError",
    "WrongClassError",
    "WrongThresholdsError",
    "best_pendant_seed",
    "block_cut_tree",
    "brute_force_min_seed",
    "build_network",
    "classify_block",
    "classify_graph",
    "closure",
    "closure_sequential",
    "closure_subcubes",
    "is_target_set",
    "min_seed_formula",
    "optimal_seed",
    "parse_instance",
    "parse_network_file",
    "recognize_chordal",
    "serialize_network",
    "solve",
    "solve_block_cactus",
    "solve_chordal",
]
