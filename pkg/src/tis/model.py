"""Core data model: temporal interval instances, exact rational endpoints,
instance file I/O, and elementary graph algebra.

An instance bundles a weighted vertex set, tau layers (each either an interval
model or an explicit edge list), a window width delta, and a target size k.
All endpoints and weights are exact rationals (`fractions.Fraction`); adjacency
in a model is closed-interval intersection, so touching endpoints count as an
edge. Every value is immutable after construction and every operation here is
a pure function of its inputs.

Instance file format (UTF-8, line oriented, '#' starts a comment):

    tis 1
    mode model|edges
    n <int>
    tau <int>
    delta <int>
    k <int>
    unit true|false          (optional; default true in model mode, false in edges mode)
    vertex <name> [weight]   (one per vertex; weight rational p/q or integer, default 1)
    layer <t>                (t = 1..tau, ascending)
    interval <name> <left> <right>   (model mode)
    edge <u> <v>                     (edges mode)

Canonical serialization: header fields in the order above, vertices in
declaration order, layers ascending, interval/edge lines sorted
lexicographically.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Fraction

VertexRef = Union[int, str]


class InstanceError(ValueError):
    """Malformed instance text or inconsistent instance data.

    Carries the offending 1-based line number when raised by the parser.
    """

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NotUnitError(ValueError):
    """An operation that is only valid on unit instances was given a non-unit one."""


class LimitExceeded(RuntimeError):
    """An exact/oracle routine was asked to exceed its configured size cap."""


class BudgetExceeded(RuntimeError):
    """No deletion set within the requested budget exists."""


_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/[1-9][0-9]*)?$")
_NAME_RE = re.compile(r"^\S+$")


def parse_rational(token: str, line: int | None = None) -> Fraction:
    """Parse 'p' or 'p/q' into an exact rational; anything else is an error."""
    if not _RATIONAL_RE.match(token):
        raise InstanceError(f"bad rational {token!r} (expected p or p/q)", line)
    return Fraction(token)


def format_rational(x: Fraction) -> str:
    """Reduced 'p/q', or plain 'p' when the denominator is 1."""
    return str(x)


@dataclass(frozen=True)
class VertexId:
    """A vertex: unique whitespace-free name plus its dense 0-based index."""

    name: str
    index: int


class StaticGraph:
    """An undirected graph on vertices 0..n-1: one layer, or a conflict graph.

    Edges are stored as a frozenset of (u, v) pairs with u < v; adjacency sets
    are precomputed. Instances are immutable by convention.
    """

    __slots__ = ("n", "edges", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        norm = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            norm.add((u, v) if u < v else (v, u))
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in norm:
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(norm))
        object.__setattr__(self, "_adj", tuple(frozenset(s) for s in adj))

    def __setattr__(self, name, value):  # immutability guard
        raise AttributeError("StaticGraph is immutable")

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self.edges

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        return self._adj[v] | {v}

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def induced(self, keep: Sequence[int]) -> "StaticGraph":
        """Induced subgraph on `keep`, re-indexed densely in the given order."""
        pos = {old: new for new, old in enumerate(keep)}
        if len(pos) != len(keep):
            raise ValueError("duplicate vertex in induced-subgraph selection")
        edges = [
            (pos[u], pos[v])
            for (u, v) in self.edges
            if u in pos and v in pos
        ]
        return StaticGraph(len(keep), edges)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, StaticGraph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"StaticGraph(n={self.n}, edges={sorted(self.edges)})"


def edge_intersection(g1: StaticGraph, g2: StaticGraph) -> StaticGraph:
    """Graph on the same vertices whose edge set is E(g1) ∩ E(g2)."""
    if g1.n != g2.n:
        raise ValueError(f"vertex-count mismatch: {g1.n} != {g2.n}")
    return StaticGraph(g1.n, g1.edges & g2.edges)


def edge_union(g1: StaticGraph, g2: StaticGraph) -> StaticGraph:
    """Graph on the same vertices whose edge set is E(g1) ∪ E(g2)."""
    if g1.n != g2.n:
        raise ValueError(f"vertex-count mismatch: {g1.n} != {g2.n}")
    return StaticGraph(g1.n, g1.edges | g2.edges)


class IntervalModel:
    """Closed intervals [left, right] with exact rational endpoints, one per vertex.

    The induced graph has an edge {u, v} exactly when the two intervals
    intersect; touching endpoints intersect.
    """

    __slots__ = ("intervals",)

    def __init__(self, intervals: Iterable[tuple[Fraction, Fraction]]):
        ivs = []
        for lo, hi in intervals:
            lo = Fraction(lo)
            hi = Fraction(hi)
            if lo > hi:
                raise ValueError(f"empty interval [{lo}, {hi}]")
            ivs.append((lo, hi))
        object.__setattr__(self, "intervals", tuple(ivs))

    def __setattr__(self, name, value):
        raise AttributeError("IntervalModel is immutable")

    @property
    def n(self) -> int:
        return len(self.intervals)

    def left(self, v: int) -> Fraction:
        return self.intervals[v][0]

    def right(self, v: int) -> Fraction:
        return self.intervals[v][1]

    def intersects(self, u: int, v: int) -> bool:
        lu, ru = self.intervals[u]
        lv, rv = self.intervals[v]
        return max(lu, lv) <= min(ru, rv)

    def induced_graph(self) -> StaticGraph:
        n = self.n
        edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if self.intersects(u, v)
        ]
        return StaticGraph(n, edges)

    def restrict(self, keep: Sequence[int]) -> "IntervalModel":
        return IntervalModel(self.intervals[v] for v in keep)

    def is_unit_length(self) -> bool:
        """True when every interval has the same rational length."""
        if self.n <= 1:
            return True
        lengths = {hi - lo for lo, hi in self.intervals}
        return len(lengths) == 1

    def __eq__(self, other) -> bool:
        return isinstance(other, IntervalModel) and self.intervals == other.intervals

    def __hash__(self) -> int:
        return hash(self.intervals)

    def __repr__(self) -> str:
        return f"IntervalModel({list(self.intervals)!r})"


Layer = Union[IntervalModel, StaticGraph]


class TemporalIntervalInstance:
    """A temporal interval instance: weighted vertices, tau layers, delta, k.

    Layers are interval models (mode 'model') or explicit edge lists (mode
    'edges'). `unit_flag` declares that all intervals within each layer share
    one length; in model mode this is verified at construction, in edges mode
    it is a declaration that unit-dependent operations verify lazily.
    """

    __slots__ = (
        "names",
        "weights",
        "tau",
        "delta",
        "k",
        "mode",
        "unit_flag",
        "layers",
        "_name_to_index",
        "_layer_cache",
    )

    def __init__(
        self,
        names: Sequence[str],
        weights: Sequence[Fraction],
        tau: int,
        delta: int,
        k: int,
        mode: str,
        layers: Sequence[Layer],
        unit_flag: bool,
    ):
        names = tuple(names)
        weights = tuple(Fraction(w) for w in weights)
        n = len(names)
        if len(set(names)) != n:
            raise InstanceError("duplicate vertex name")
        for name in names:
            if not _NAME_RE.match(name):
                raise InstanceError(f"bad vertex name {name!r}")
        if len(weights) != n:
            raise InstanceError("weight count does not match vertex count")
        if any(w < 0 for w in weights):
            raise InstanceError("negative vertex weight")
        if tau < 1:
            raise InstanceError(f"tau must be positive, got {tau}")
        if not 1 <= delta <= tau:
            raise InstanceError(f"delta {delta} out of [1, {tau}]")
        if k < 0:
            raise InstanceError(f"k must be nonnegative, got {k}")
        if mode not in ("model", "edges"):
            raise InstanceError(f"unknown mode {mode!r}")
        layers = tuple(layers)
        if len(layers) != tau:
            raise InstanceError(f"expected {tau} layers, got {len(layers)}")
        for t, layer in enumerate(layers, start=1):
            if mode == "model":
                if not isinstance(layer, IntervalModel):
                    raise InstanceError(f"layer {t}: expected an interval model")
                if layer.n != n:
                    raise InstanceError(
                        f"layer {t}: model covers {layer.n} vertices, expected {n}"
                    )
                if unit_flag and not layer.is_unit_length():
                    raise InstanceError(
                        f"layer {t}: unit flag declared but interval lengths differ"
                    )
            else:
                if not isinstance(layer, StaticGraph):
                    raise InstanceError(f"layer {t}: expected an edge-list graph")
                if layer.n != n:
                    raise InstanceError(
                        f"layer {t}: graph has {layer.n} vertices, expected {n}"
                    )
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "tau", tau)
        object.__setattr__(self, "delta", delta)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "mode", mode)
        object.__setattr__(self, "unit_flag", unit_flag)
        object.__setattr__(self, "layers", layers)
        object.__setattr__(
            self, "_name_to_index", {name: i for i, name in enumerate(names)}
        )
        object.__setattr__(self, "_layer_cache", [None] * tau)

    def __setattr__(self, name, value):
        raise AttributeError("TemporalIntervalInstance is immutable")

    @property
    def n(self) -> int:
        return len(self.names)

    def vertices(self) -> list[VertexId]:
        return [VertexId(name, i) for i, name in enumerate(self.names)]

    def vertex_index(self, ref: VertexRef) -> int:
        if isinstance(ref, int):
            if not 0 <= ref < self.n:
                raise InstanceError(f"vertex index {ref} out of range")
            return ref
        idx = self._name_to_index.get(ref)
        if idx is None:
            raise InstanceError(f"unknown vertex name {ref!r}")
        return idx

    def vertex_set(self, refs: Iterable[VertexRef]) -> frozenset[int]:
        return frozenset(self.vertex_index(r) for r in refs)

    def weight_of(self, vs: Iterable[int]) -> Fraction:
        return sum((self.weights[v] for v in vs), Fraction(0))

    def layer_model(self, t: int) -> IntervalModel:
        if self.mode != "model":
            raise InstanceError("instance has no interval models (edges mode)")
        if not 1 <= t <= self.tau:
            raise InstanceError(f"layer index {t} out of [1, {self.tau}]")
        layer = self.layers[t - 1]
        assert isinstance(layer, IntervalModel)
        return layer

    def layer_graph(self, t: int) -> StaticGraph:
        """The static graph of layer t (1-based); derived and cached in model mode."""
        if not 1 <= t <= self.tau:
            raise InstanceError(f"layer index {t} out of [1, {self.tau}]")
        layer = self.layers[t - 1]
        if isinstance(layer, StaticGraph):
            return layer
        cached = self._layer_cache[t - 1]
        if cached is None:
            cached = layer.induced_graph()
            self._layer_cache[t - 1] = cached
        return cached

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TemporalIntervalInstance)
            and self.names == other.names
            and self.weights == other.weights
            and self.tau == other.tau
            and self.delta == other.delta
            and self.k == other.k
            and self.mode == other.mode
            and self.unit_flag == other.unit_flag
            and self.layers == other.layers
        )

    def __hash__(self) -> int:
        return hash((self.names, self.tau, self.delta, self.k, self.mode))

    def __repr__(self) -> str:
        return (
            f"TemporalIntervalInstance(n={self.n}, tau={self.tau}, "
            f"delta={self.delta}, k={self.k}, mode={self.mode!r})"
        )


@dataclass(frozen=True)
class Solution:
    """A solver result: selected vertex indices, objective, and a certificate
    (the independence report) for independent re-verification."""

    selected: frozenset[int]
    objective: Fraction
    algorithm: str
    certificate: object = None

    @property
    def cardinality(self) -> int:
        return len(self.selected)


def layer_graph(inst: TemporalIntervalInstance, t: int) -> StaticGraph:
    """Module-level alias for the layer accessor; t is 1-based."""
    return inst.layer_graph(t)


# -- instance file parsing ---------------------------------------------------

_HEADER_KEYS = ("mode", "n", "tau", "delta", "k", "unit")


def parse_instance(text: str) -> TemporalIntervalInstance:
    """Parse instance-file text into a validated instance.

    Errors carry the 1-based line number of the offending line.
    """
    lines: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            lines.append((lineno, body.split()))
    if not lines:
        raise InstanceError("empty instance file")

    lineno, toks = lines[0]
    if toks != ["tis", "1"]:
        raise InstanceError("expected header 'tis 1'", lineno)

    header: dict[str, str] = {}
    pos = 1
    while pos < len(lines):
        lineno, toks = lines[pos]
        if toks[0] not in _HEADER_KEYS:
            break
        if len(toks) != 2:
            raise InstanceError(f"expected '{toks[0]} <value>'", lineno)
        if toks[0] in header:
            raise InstanceError(f"duplicate {toks[0]} line", lineno)
        header[toks[0]] = toks[1]
        pos += 1

    for key in ("mode", "n", "tau", "delta", "k"):
        if key not in header:
            raise InstanceError(f"missing {key} line")
    mode = header["mode"]
    if mode not in ("model", "edges"):
        raise InstanceError(f"mode must be model or edges, got {mode!r}")

    def intfield(key: str) -> int:
        val = header[key]
        if not re.match(r"^[+-]?\d+$", val):
            raise InstanceError(f"{key} must be an integer, got {val!r}")
        return int(val)

    n = intfield("n")
    tau = intfield("tau")
    delta = intfield("delta")
    k = intfield("k")
    if n < 0:
        raise InstanceError("n must be nonnegative")
    if "unit" in header:
        if header["unit"] not in ("true", "false"):
            raise InstanceError(f"unit must be true or false, got {header['unit']!r}")
        unit_flag = header["unit"] == "true"
    else:
        unit_flag = mode == "model"

    names: list[str] = []
    weights: list[Fraction] = []
    while pos < len(lines):
        lineno, toks = lines[pos]
        if toks[0] != "vertex":
            break
        if len(toks) not in (2, 3):
            raise InstanceError("expected 'vertex <name> [weight]'", lineno)
        name = toks[1]
        if name in names:
            raise InstanceError(f"duplicate vertex {name!r}", lineno)
        w = parse_rational(toks[2], lineno) if len(toks) == 3 else Fraction(1)
        if w < 0:
            raise InstanceError(f"negative weight for vertex {name!r}", lineno)
        names.append(name)
        weights.append(w)
        pos += 1
    if len(names) != n:
        raise InstanceError(f"declared n={n} but found {len(names)} vertex lines")
    name_to_index = {name: i for i, name in enumerate(names)}

    layers: list[Layer] = []
    expected_t = 1
    while pos < len(lines):
        lineno, toks = lines[pos]
        if toks[0] == "vertex":
            raise InstanceError("vertex line after first layer", lineno)
        if toks != ["layer", str(expected_t)]:
            raise InstanceError(
                f"expected 'layer {expected_t}', got {' '.join(toks)!r}", lineno
            )
        pos += 1
        if mode == "model":
            ivs: dict[int, tuple[Fraction, Fraction]] = {}
            while pos < len(lines) and lines[pos][1][0] == "interval":
                lineno, toks = lines[pos]
                if len(toks) != 4:
                    raise InstanceError("expected 'interval <name> <left> <right>'", lineno)
                name = toks[1]
                if name not in name_to_index:
                    raise InstanceError(f"unknown vertex {name!r}", lineno)
                v = name_to_index[name]
                if v in ivs:
                    raise InstanceError(f"duplicate interval for {name!r}", lineno)
                lo = parse_rational(toks[2], lineno)
                hi = parse_rational(toks[3], lineno)
                if lo > hi:
                    raise InstanceError(f"empty interval [{lo}, {hi}]", lineno)
                ivs[v] = (lo, hi)
                pos += 1
            missing = [names[v] for v in range(n) if v not in ivs]
            if missing:
                raise InstanceError(
                    f"layer {expected_t}: missing interval for {missing[0]!r}"
                )
            layers.append(IntervalModel(ivs[v] for v in range(n)))
        else:
            edges: set[tuple[int, int]] = set()
            while pos < len(lines) and lines[pos][1][0] == "edge":
                lineno, toks = lines[pos]
                if len(toks) != 3:
                    raise InstanceError("expected 'edge <u> <v>'", lineno)
                for name in toks[1:]:
                    if name not in name_to_index:
                        raise InstanceError(f"unknown vertex {name!r}", lineno)
                u, v = name_to_index[toks[1]], name_to_index[toks[2]]
                if u == v:
                    raise InstanceError(f"self-loop at {toks[1]!r}", lineno)
                key = (u, v) if u < v else (v, u)
                if key in edges:
                    raise InstanceError(f"duplicate edge {toks[1]} {toks[2]}", lineno)
                edges.add(key)
                pos += 1
            layers.append(StaticGraph(n, edges))
        expected_t += 1
    if len(layers) != tau:
        raise InstanceError(f"declared tau={tau} but found {len(layers)} layer blocks")

    try:
        return TemporalIntervalInstance(
            names, weights, tau, delta, k, mode, layers, unit_flag
        )
    except InstanceError:
        raise
    except ValueError as exc:
        raise InstanceError(str(exc)) from exc


def serialize_instance(inst: TemporalIntervalInstance) -> str:
    """Canonical deterministic text form; parse ∘ serialize is the identity."""
    out = ["tis 1"]
    out.append(f"mode {inst.mode}")
    out.append(f"n {inst.n}")
    out.append(f"tau {inst.tau}")
    out.append(f"delta {inst.delta}")
    out.append(f"k {inst.k}")
    out.append(f"unit {'true' if inst.unit_flag else 'false'}")
    for name, w in zip(inst.names, inst.weights):
        out.append(f"vertex {name} {format_rational(w)}")
    for t in range(1, inst.tau + 1):
        out.append(f"layer {t}")
        layer = inst.layers[t - 1]
        if isinstance(layer, IntervalModel):
            rows = [
                (inst.names[v], lo, hi)
                for v, (lo, hi) in enumerate(layer.intervals)
            ]
            for name, lo, hi in sorted(rows, key=lambda r: r[0]):
                out.append(
                    f"interval {name} {format_rational(lo)} {format_rational(hi)}"
                )
        else:
            pairs = sorted(
                tuple(sorted((inst.names[u], inst.names[v])))
                for (u, v) in layer.edges
            )
            for a, b in pairs:
                out.append(f"edge {a} {b}")
    return "\n".join(out) + "\n"


def remove_vertices(
    inst: TemporalIntervalInstance, remove: Iterable[VertexRef]
) -> TemporalIntervalInstance:
    """The temporal instance induced on the surviving vertices.

    Vertices may be given by name or index. Surviving vertices keep their
    declaration order and names; indices are re-densified. tau, delta, k and
    the unit flag are unchanged.
    """
    gone = inst.vertex_set(remove)
    keep = [v for v in range(inst.n) if v not in gone]
    layers: list[Layer] = []
    for layer in inst.layers:
        if isinstance(layer, IntervalModel):
            layers.append(layer.restrict(keep))
        else:
            layers.append(layer.induced(keep))
    return TemporalIntervalInstance(
        [inst.names[v] for v in keep],
        [inst.weights[v] for v in keep],
        inst.tau,
        inst.delta,
        inst.k,
        inst.mode,
        layers,
        inst.unit_flag,
    )
