"""Plain-text instance format.

::

    # comment
    p tss <n> <m>
    e <u> <v>              (m lines, 0-based ids)
    t * <k>                (constant threshold; must precede overrides)
    t <u> <k>              (per-vertex override)
    hamming <n1,...,nt>    (replaces the edge lines; threshold 2 unless overridden)
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .errors import GraphInputError, ParseError
from .graph import ThresholdedNetwork, build_network
from .hamming import HammingSpec, hamming_graph

__all__ = ["Instance", "parse_instance", "parse_network_file", "serialize_network"]


@dataclass(frozen=True)
class Instance:
    net: ThresholdedNetwork
    hamming: HammingSpec | None = None


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(lineno, f"expected integers, got {' '.join(tokens)!r}") from None


def parse_instance(text: str, hamming_limit: int | None = None) -> Instance:
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    seen_edges: dict[tuple[int, int], int] = {}
    default: int | None = None
    overrides: dict[int, int] = {}
    spec: HammingSpec | None = None

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tok = line.split()
        kind = tok[0]
        if kind == "p":
            if len(tok) != 4 or tok[1] != "tss":
                raise ParseError(lineno, "header must read 'p tss <n> <m>'")
            if header is not None:
                raise ParseError(lineno, "second header line")
            n, m = _ints(tok[2:], lineno)
            if n < 1 or m < 0:
                raise ParseError(lineno, "header needs n >= 1 and m >= 0")
            header = (n, m)
        elif kind == "e":
            if header is None:
                raise ParseError(lineno, "edge before header")
            if len(tok) != 3:
                raise ParseError(lineno, "edge line must read 'e <u> <v>'")
            u, v = _ints(tok[1:], lineno)
            n = header[0]
            if not (0 <= u < n and 0 <= v < n):
                raise ParseError(lineno, f"vertex id out of range 0..{n - 1}")
            if u == v:
                raise ParseError(lineno, f"self-loop at vertex {u}")
            key = (min(u, v), max(u, v))
            if key in seen_edges:
                raise ParseError(lineno, f"duplicate edge {u} {v} (first on line {seen_edges[key]})")
            seen_edges[key] = lineno
            edges.append((u, v))
        elif kind == "t":
            if len(tok) != 3:
                raise ParseError(lineno, "threshold line must read 't <u|*> <k>'")
            (k,) = _ints(tok[2:], lineno)
            if tok[1] == "*":
                if default is not None:
                    raise ParseError(lineno, "second constant threshold line")
                if overrides:
                    raise ParseError(lineno, "constant threshold must precede overrides")
                default = k
            else:
                (u,) = _ints(tok[1:2], lineno)
                if u in overrides:
                    raise ParseError(lineno, f"vertex {u} already has a threshold")
                overrides[u] = k
        elif kind == "hamming":
            if len(tok) != 2:
                raise ParseError(lineno, "hamming line must read 'hamming <n1,...,nt>'")
            if spec is not None:
                raise ParseError(lineno, "second hamming line")
            try:
                spec = HammingSpec(tuple(_ints(tok[1].split(","), lineno)))
            except GraphInputError as exc:
                raise ParseError(lineno, str(exc)) from None
        else:
            raise ParseError(lineno, f"unknown record type {kind!r}")

    if spec is not None:
        if edges:
            raise ParseError(0, "hamming declaration replaces edge lines; found both")
        n = spec.order
        if header is not None and header[0] != n:
            raise ParseError(0, f"header n={header[0]} but hamming dims give {n} vertices")
        if default is None:
            default = 2
        try:
            base = hamming_graph(spec) if hamming_limit is None else hamming_graph(spec, hamming_limit)
        except Exception as exc:
            raise ParseError(0, str(exc)) from None
    else:
        if header is None:
            raise ParseError(0, "missing 'p tss <n> <m>' header")
        n, m = header
        if len(edges) != m:
            raise ParseError(0, f"header announces {m} edges, found {len(edges)}")
        base = None

    bad = [u for u in overrides if not 0 <= u < n]
    if bad:
        raise ParseError(0, f"threshold for unknown vertex {bad[0]}")
    theta = []
    for v in range(n):
        if v in overrides:
            theta.append(overrides[v])
        elif default is not None:
            theta.append(default)
        else:
            raise ParseError(0, f"missing threshold for vertex {v}")

    if base is not None:
        return Instance(base.with_theta(theta), spec)
    return Instance(build_network(n, edges, theta), None)


def parse_network_file(text: str) -> ThresholdedNetwork:
    """Parse instance text into a validated network; errors carry the line number."""
    return parse_instance(text).net


def serialize_network(net: ThresholdedNetwork, hamming: HammingSpec | None = None) -> str:
    """Canonical text: sorted edges, the most common threshold as ``t *``, then overrides."""
    lines = []
    if hamming is not None:
        if hamming.order != net.n:
            raise GraphInputError("hamming spec does not match the network size")
        lines.append(f"p tss {net.n} 0")
        lines.append("hamming " + ",".join(map(str, hamming.dims)))
    else:
        lines.append(f"p tss {net.n} {net.m}")
        lines.extend(f"e {u} {v}" for u, v in net.edges())
    if net.n:
        counts = Counter(net.theta)
        common = min(counts, key=lambda k: (-counts[k], k))
        lines.append(f"t * {common}")
        lines.extend(f"t {v} {k}" for v, k in enumerate(net.theta) if k != common)
    return "\n".join(lines) + "\n"

