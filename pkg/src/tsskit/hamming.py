"""Hamming graphs under threshold 2: subcube closure algebra and optimal seeds.

A subcube ``x_A`` is every vertex agreeing with ``x`` on the coordinates in
``A``. Under threshold 2 the closure of any seed set is a union of subcubes
at pairwise distance >= 3, and two subcubes at distance <= 2 merge into a
single larger one. Coordinates are 0-based throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Iterator, Sequence

from .errors import GraphInputError, TooLargeError
from .graph import ThresholdedNetwork

__all__ = [
    "HammingSpec",
    "Subcube",
    "SubcubeUnion",
    "DEFAULT_MATERIALIZE_LIMIT",
    "hamming_graph",
    "encode",
    "decode",
    "hamming_distance",
    "subcube_distance",
    "merge_step",
    "closure_subcubes",
    "star_lower_bound_holds",
    "optimal_seed",
    "min_seed_formula",
    "parse_tuple",
]

DEFAULT_MATERIALIZE_LIMIT = 10**5


@dataclass(frozen=True)
class HammingSpec:
    dims: tuple[int, ...]

    def __post_init__(self):
        dims = tuple(int(d) for d in self.dims)
        object.__setattr__(self, "dims", dims)
        if not dims:
            raise GraphInputError("a Hamming graph needs at least one factor")
        if any(d < 2 for d in dims):
            raise GraphInputError(f"every factor needs at least 2 vertices, got {dims}")

    @property
    def t(self) -> int:
        return len(self.dims)

    @property
    def order(self) -> int:
        return math.prod(self.dims)

    def vertices(self) -> Iterator[tuple[int, ...]]:
        return product(*(range(d) for d in self.dims))

    def check(self, x: Sequence[int]) -> tuple[int, ...]:
        x = tuple(x)
        if len(x) != self.t:
            raise GraphInputError(f"tuple {x} has {len(x)} coordinates, expected {self.t}")
        if any(not 0 <= c < d for c, d in zip(x, self.dims)):
            raise GraphInputError(f"tuple {x} out of range for dims {self.dims}")
        return x


def encode(spec: HammingSpec, x: Sequence[int]) -> int:
    """Row-major mixed-radix id: the last coordinate varies fastest."""
    out = 0
    for c, d in zip(x, spec.dims):
        out = out * d + c
    return out


def decode(spec: HammingSpec, vid: int) -> tuple[int, ...]:
    out = []
    for d in reversed(spec.dims):
        vid, c = divmod(vid, d)
        out.append(c)
    return tuple(reversed(out))


def parse_tuple(text: str) -> tuple[int, ...]:
    """Parse the CLI tuple syntax ``x1,x2,...,xt``."""
    try:
        return tuple(int(p) for p in text.split(","))
    except ValueError:
        raise GraphInputError(f"bad tuple {text!r}; expected comma-separated integers") from None


def hamming_graph(
    spec: HammingSpec, limit: int = DEFAULT_MATERIALIZE_LIMIT, theta: int = 2
) -> ThresholdedNetwork:
    """Materialize the Cartesian product of complete graphs with constant threshold."""
    n = spec.order
    if n > limit:
        raise TooLargeError(f"{n} vertices exceeds materialization limit {limit}")
    strides = [math.prod(spec.dims[i + 1:]) for i in range(spec.t)]
    adj = []
    for vid, x in enumerate(spec.vertices()):
        nbrs = []
        for i, (c, d) in enumerate(zip(x, spec.dims)):
            base = vid - c * strides[i]
            nbrs.extend(base + o * strides[i] for o in range(d) if o != c)
        nbrs.sort()
        adj.append(tuple(nbrs))
    return ThresholdedNetwork(n, tuple(adj), (theta,) * n)


def hamming_distance(u: Sequence[int], v: Sequence[int]) -> int:
    if len(u) != len(v):
        raise GraphInputError(f"dimension mismatch: {len(u)} vs {len(v)}")
    return sum(a != b for a, b in zip(u, v))


@dataclass(frozen=True, order=True)
class Subcube:
    """``rep`` with free coordinates zeroed; ``fixed`` is the sorted tuple of fixed indices."""

    rep: tuple[int, ...]
    fixed: tuple[int, ...]

    @classmethod
    def make(cls, rep: Sequence[int], fixed: Iterable[int]) -> "Subcube":
        fixed = tuple(sorted(set(fixed)))
        fs = set(fixed)
        return cls(tuple(c if i in fs else 0 for i, c in enumerate(rep)), fixed)

    @classmethod
    def point(cls, x: Sequence[int]) -> "Subcube":
        return cls(tuple(x), tuple(range(len(x))))

    def contains(self, y: Sequence[int]) -> bool:
        return all(y[i] == self.rep[i] for i in self.fixed)

    def size(self, spec: HammingSpec) -> int:
        fs = set(self.fixed)
        return math.prod(d for i, d in enumerate(spec.dims) if i not in fs)

    def members(self, spec: HammingSpec) -> Iterator[tuple[int, ...]]:
        fs = set(self.fixed)
        ranges = [(self.rep[i],) if i in fs else range(d) for i, d in enumerate(spec.dims)]
        return product(*ranges)


def _differing_fixed(c1: Subcube, c2: Subcube) -> list[int]:
    if len(c1.rep) != len(c2.rep):
        raise GraphInputError(f"dimension mismatch: {len(c1.rep)} vs {len(c2.rep)}")
    common = set(c1.fixed).intersection(c2.fixed)
    return [i for i in sorted(common) if c1.rep[i] != c2.rep[i]]


def subcube_distance(c1: Subcube, c2: Subcube) -> int:
    """Minimum Hamming distance between members: disagreements on commonly fixed coordinates."""
    return len(_differing_fixed(c1, c2))


def merge_step(c1: Subcube, c2: Subcube) -> Subcube | None:
    """Closure of the union of two subcubes, or ``None`` when they stay separate.

    At distance 0, 1 or 2 the closure is the subcube of ``c1.rep`` fixing the
    common coordinates on which the two agree. At distance >= 3 nothing
    outside the union activates.
    """
    diff = _differing_fixed(c1, c2)
    if len(diff) >= 3:
        return None
    keep = set(c1.fixed).intersection(c2.fixed).difference(diff)
    return Subcube.make(c1.rep, keep)


@dataclass(frozen=True)
class SubcubeUnion:
    parts: tuple[Subcube, ...]

    @property
    def k(self) -> int:
        return len(self.parts)

    def members(self, spec: HammingSpec) -> set[tuple[int, ...]]:
        out: set[tuple[int, ...]] = set()
        for p in self.parts:
            out.update(p.members(spec))
        return out

    def is_closed(self) -> bool:
        return all(subcube_distance(a, b) >= 3 for a, b in combinations(self.parts, 2))

    def covers_everything(self) -> bool:
        return any(not p.fixed for p in self.parts)


def closure_subcubes(
    spec: HammingSpec, seeds: Iterable[Sequence[int]], schedule: str = "first"
) -> SubcubeUnion:
    """Closure of ``seeds`` under threshold 2, as pairwise-far subcubes.

    Starts from one point subcube per seed and merges any pair at distance
    <= 2 until none remains. ``schedule`` picks the pair: ``"first"`` takes
    the lexicographically first eligible index pair, ``"last"`` the last one.
    """
    parts = sorted({Subcube.point(spec.check(s)) for s in seeds})
    if not parts:
        raise GraphInputError("closure_subcubes needs a nonempty seed set")
    if schedule not in ("first", "last"):
        raise ValueError(f"unknown merge schedule {schedule!r}")
    while True:
        pairs = combinations(range(len(parts)), 2)
        if schedule == "last":
            pairs = reversed(list(pairs))
        found = None
        for i, j in pairs:
            merged = merge_step(parts[i], parts[j])
            if merged is not None:
                found = (i, j, merged)
                break
        if found is None:
            break
        i, j, merged = found
        parts = [p for idx, p in enumerate(parts) if idx not in (i, j)]
        parts.append(merged)
        parts.sort()
    return SubcubeUnion(tuple(parts))


def star_lower_bound_holds(
    spec: HammingSpec, seeds: Iterable[Sequence[int]], union: SubcubeUnion
) -> bool:
    """Check ``sum |A_i| >= (2 + t) k - 2 |S|`` for a closed subcube normal form.

    Raises ``ValueError`` if ``union`` has two parts within distance 2 (it
    is then not the closure of anything).
    """
    if not union.is_closed():
        raise ValueError("subcube union is not closed: two parts lie within distance 2")
    s = len({tuple(x) for x in seeds})
    total = sum(len(p.fixed) for p in union.parts)
    return total >= (2 + spec.t) * union.k - 2 * s


def min_seed_formula(t: int) -> int:
    """Minimum target set size of a Hamming graph with ``t`` factors and threshold 2."""
    if t < 1:
        raise ValueError("t must be at least 1")
    return 1 + (t + 1) // 2


def optimal_seed(spec: HammingSpec) -> list[tuple[int, ...]]:
    """An optimal threshold-2 target set of size ``1 + ceil(t/2)``.

    Uses coordinate values 0 and 1 in every factor. ``p(j)`` is the zero
    vector with coordinate ``j`` set to 1 and ``q(j)`` sets coordinates ``j``
    and ``j + 1``. Even ``t``: ``p(0), p(1), q(2), q(4), ..., q(t-2)``. Odd
    ``t``: ``p(0), p(1), p(2), q(3), q(5), ..., q(t-2)``. For ``t = 1`` the
    set is two distinct vertices of the clique.
    """
    t = spec.t
    zero = [0] * t

    def p(j: int) -> tuple[int, ...]:
        x = list(zero)
        x[j] = 1
        return tuple(x)

    def q(j: int) -> tuple[int, ...]:
        x = list(zero)
        x[j] = x[j + 1] = 1
        return tuple(x)

    if t == 1:
        return [(0,), (1,)]
    if t % 2 == 0:
        return [p(0), p(1), *(q(j) for j in range(2, t - 1, 2))]
    return [p(0), p(1), p(2), *(q(j) for j in range(3, t - 1, 2))]
