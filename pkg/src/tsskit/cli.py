"""Command line interface: ``tss <command> ...``.

Output is line oriented, one fact per line. Exit codes: 0 success, 1
infeasible / wrong graph class / oracle limit, 2 malformed input.
"""

from __future__ import annotations

import argparse
import re
import sys
from typing import Sequence

from .diffusion import closure, is_target_set
from .errors import (
    GraphInputError,
    NoSolutionWithinCap,
    OracleLimitExceeded,
    ParseError,
    TooLargeError,
    TSSError,
    WrongClassError,
    WrongThresholdsError,
)
from .generators import SplitMix64, ThresholdPolicy, gen_block_cactus, gen_chordal
from .graph import classify_graph
from .hamming import (
    HammingSpec,
    closure_subcubes,
    encode,
    hamming_graph,
    min_seed_formula,
    optimal_seed,
    parse_tuple,
)
from .io import Instance, parse_instance, serialize_network
from .oracle import brute_force_min_seed
from .solve import solve

EXIT_OK, EXIT_INFEASIBLE, EXIT_PARSE = 0, 1, 2


def _read_instance(path: str) -> Instance:
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    return parse_instance(text)


def _parse_ids(text: str) -> list[int]:
    parts = [p for p in re.split(r"[,\s]+", text.strip()) if p]
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise GraphInputError(f"bad seed set {text!r}; expected ids separated by commas") from None


def _fmt_seed(ids) -> str:
    return " ".join(["seed", *map(str, sorted(ids))])


def _out(line: str) -> None:
    print(line)


def cmd_solve(args) -> int:
    inst = _read_instance(args.file)
    method = args.cls
    if method == "auto" and inst.hamming is None:
        _out(f"class {classify_graph(inst.net).value}")
    report = solve(inst.net, method, inst.hamming)
    _out(f"solver {report.solver}")
    _out(f"minseed {report.size}")
    _out(_fmt_seed(report.seed))
    _out(f"verified {str(report.verified).lower()}")
    if args.trace:
        for step in report.per_block_trace:
            cut = "-" if step.cut is None else step.cut
            _out(
                f"block {','.join(map(str, step.block))} cut {cut} kind {step.kind} "
                f"local {','.join(map(str, sorted(step.local_seed))) or '-'} gain {step.gain}"
            )
    return EXIT_OK if report.verified else EXIT_INFEASIBLE


def cmd_simulate(args) -> int:
    net = _read_instance(args.file).net
    seeds = _parse_ids(args.seed_set)
    result = closure(net, seeds)
    _out(f"active {len(result.active)}")
    _out(f"rounds {result.rounds}")
    if args.trace:
        by_round: dict[int, list[int]] = {}
        for v, r in result.round_of.items():
            by_round.setdefault(r, []).append(v)
        for r in sorted(by_round):
            _out(f"round {r} " + " ".join(map(str, sorted(by_round[r]))))
    ok = len(result.active) == net.n
    _out(f"verified {str(ok).lower()}")
    return EXIT_OK


def cmd_check(args) -> int:
    inst = _read_instance(args.file)
    if args.seed_tuples is not None:
        if inst.hamming is None:
            raise GraphInputError("--seed-tuples needs an instance with a 'hamming' line")
        tuples = [inst.hamming.check(parse_tuple(x)) for x in args.seed_tuples.split()]
        seeds = [encode(inst.hamming, x) for x in tuples]
    else:
        seeds = _parse_ids(args.seed_set)
    ok = is_target_set(inst.net, seeds)
    _out(f"verified {str(ok).lower()}")
    return EXIT_OK if ok else EXIT_INFEASIBLE


def cmd_oracle(args) -> int:
    net = _read_instance(args.file).net
    k, witness = brute_force_min_seed(net, args.cap)
    _out(f"minseed {k}")
    _out(_fmt_seed(witness))
    return EXIT_OK


def cmd_gen(args) -> int:
    rng = SplitMix64(args.seed)
    if args.family == "block-cactus":
        if args.theta_const is not None:
            policy = ThresholdPolicy("constant", value=args.theta_const)
        else:
            policy = ThresholdPolicy("uniform", lo=args.theta_lo, hi_offset=args.theta_hi_offset)
        net = gen_block_cactus(
            rng, args.blocks, args.min_size, args.max_size, args.cycle_fraction, policy
        )
    else:
        weights = tuple(float(w) for w in args.theta_weights.split(","))
        net = gen_chordal(rng, args.n, args.width, args.min_width, weights, args.theta_const)
    text = f"# generated: {args.family} splitmix64 seed {args.seed}\n" + serialize_network(net)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_hamming(args) -> int:
    try:
        spec = HammingSpec(tuple(int(d) for d in args.dims.split(",")))
    except ValueError:
        raise GraphInputError(f"bad --dims {args.dims!r}") from None
    _out(f"minseed {min_seed_formula(spec.t)}")
    if args.formula and not (args.construct or args.solve):
        return EXIT_OK
    seed = optimal_seed(spec)
    _out("seed " + " ".join(",".join(map(str, x)) for x in seed))
    _out("ids " + " ".join(str(encode(spec, x)) for x in seed))
    if args.solve:
        union = closure_subcubes(spec, seed)
        ok = union.covers_everything()
        try:
            net = hamming_graph(spec)
            ok = ok and is_target_set(net, [encode(spec, x) for x in seed])
        except TooLargeError:
            pass
        _out(f"verified {str(ok).lower()}")
        return EXIT_OK if ok else EXIT_INFEASIBLE
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tss", description="Exact target set selection tools")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="optimal target set with a specialized exact solver")
    p.add_argument("file")
    p.add_argument("--class", dest="cls", default="auto",
                   choices=["auto", "block-cactus", "chordal", "hamming"])
    p.add_argument("--trace", action="store_true", help="print one line per peeled block")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("simulate", help="run the parallel activation process")
    p.add_argument("file")
    p.add_argument("--seed-set", required=True, help="comma-separated vertex ids")
    p.add_argument("--trace", action="store_true")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("check", help="is the seed set a target set?")
    p.add_argument("file")
    given = p.add_mutually_exclusive_group(required=True)
    given.add_argument("--seed-set", help="comma-separated vertex ids")
    given.add_argument("--seed-tuples", help="Hamming tuples such as '1,0,0 0,1,0'")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("oracle", help="brute-force minimum target set")
    p.add_argument("file")
    p.add_argument("--cap", type=int, default=None)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen", help="generate a random instance")
    p.add_argument("family", choices=["block-cactus", "chordal"])
    p.add_argument("--seed", type=int, required=True, help="unsigned 64-bit generator seed")
    p.add_argument("--blocks", type=int, default=4)
    p.add_argument("--min-size", type=int, default=2)
    p.add_argument("--max-size", type=int, default=5)
    p.add_argument("--cycle-fraction", type=float, default=0.5)
    p.add_argument("--theta-lo", type=int, default=0)
    p.add_argument("--theta-hi-offset", type=int, default=1)
    p.add_argument("--theta-const", type=int, default=None)
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--width", type=int, default=2)
    p.add_argument("--min-width", type=int, default=1)
    p.add_argument("--theta-weights", default="1,1,1")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("hamming", help="Hamming graph with threshold 2")
    p.add_argument("--dims", required=True, help="factor sizes n1,n2,...,nt")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--formula", action="store_true")
    mode.add_argument("--construct", action="store_true")
    mode.add_argument("--solve", action="store_true")
    p.set_defaults(func=cmd_hamming)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, GraphInputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (WrongClassError, WrongThresholdsError, NoSolutionWithinCap, OracleLimitExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except TSSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
