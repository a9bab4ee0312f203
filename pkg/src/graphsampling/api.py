"""Uniform sampler interface.

A :class:`SamplerSpec` names a method, carries its hyperparameters (all
defaulted, all inspectable) and a seed. :func:`sample` validates the input
graph, resolves the requested size and runs the method with a fresh
:class:`RandomSource` seeded from ``spec.seed``, so identical inputs always give
identical samples.

>>> spec = SamplerSpec("rw")
>>> spec.seed
42
>>> SamplerSpec("rw", seed=41).seed
41
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field, replace
from types import MappingProxyType
from typing import Any, Callable, Mapping

from . import edge_samplers as es
from . import exploration as ex
from . import node_samplers as ns
from .graph import Graph, Subgraph, validate
from .io import format_edges
from .rng import ALGORITHM, SEED_MAX, RandomSource

DEFAULT_SEED = 42


def _probability(lo_open=False, hi_open=False):
    def check(name, x):
        ok = (x > 0.0 if lo_open else x >= 0.0) and (x < 1.0 if hi_open else x <= 1.0)
        if not ok:
            lo = "(" if lo_open else "["
            hi = ")" if hi_open else "]"
            raise ValueError(f"{name} must lie in {lo}0, 1{hi}, got {x}")
        return float(x)

    return check


def _positive_float(name, x):
    if not x > 0.0 or math.isinf(x):
        raise ValueError(f"{name} must be a positive finite number, got {x}")
    return float(x)


def _int_at_least(lo):
    def check(name, x):
        if isinstance(x, bool) or not isinstance(x, int):
            raise TypeError(f"{name} must be an integer, got {x!r}")
        if x < lo:
            raise ValueError(f"{name} must be >= {lo}, got {x}")
        return x

    return check


def _optional_int_at_least(lo):
    inner = _int_at_least(lo)
    return lambda name, x: None if x is None else inner(name, x)


def _numeric(check):
    def wrapped(name, x):
        if isinstance(x, bool) or not isinstance(x, (int, float)):
            raise TypeError(f"{name} must be a number, got {x!r}")
        return check(name, x)

    return wrapped


@dataclass(frozen=True)
class Param:
    default: Any
    check: Callable[[str, Any], Any]
    kind: type
    doc: str


_IDLE = Param(None, _optional_int_at_least(1), int, "steps without a new sample before giving up (default 100*n)")
_REKINDLES = Param(100, _int_at_least(0), int, "consecutive dead fires tolerated before giving up")
_ALPHA = Param(1.0, _numeric(_positive_float), float, "exponent on the degree ratio in the acceptance test")


@dataclass(frozen=True)
class Method:
    name: str
    title: str
    family: str  # node | edge | exploration
    target: str  # nodes | edges
    output: str  # induced | edges | tree | partial
    run: Callable[..., Subgraph]
    params: Mapping[str, Param] = field(default_factory=dict)


METHODS: dict[str, Method] = {
    m.name: m
    for m in [
        Method("rn", "random node", "node", "nodes", "induced", ns.sample_rn),
        Method("rdn", "random degree node", "node", "nodes", "induced", ns.sample_rdn),
        Method("prn", "random PageRank node", "node", "nodes", "induced", ns.sample_prn),
        Method("re", "random edge", "edge", "edges", "edges", es.sample_re),
        Method("rne", "random node-edge", "edge", "edges", "edges", es.sample_rne, {"max_idle_steps": _IDLE}),
        Method(
            "hrne",
            "hybrid random node-edge",
            "edge",
            "edges",
            "edges",
            es.sample_hrne,
            {
                "q": Param(0.8, _numeric(_probability()), float, "probability of a node-edge draw per step"),
                "max_idle_steps": _IDLE,
            },
        ),
        Method("ties", "totally induced edge", "edge", "nodes", "induced", es.sample_ties),
        Method("pies", "partially induced edge", "edge", "nodes", "partial", es.sample_pies),
        Method("bfs", "breadth first search", "exploration", "nodes", "tree", ex.sample_bfs),
        Method("dfs", "depth first search", "exploration", "nodes", "tree", ex.sample_dfs),
        Method(
            "sb",
            "snowball",
            "exploration",
            "nodes",
            "induced",
            ex.sample_sb,
            {"k": Param(50, _int_at_least(1), int, "neighbors enqueued per node at most"), "max_rekindles": _REKINDLES},
        ),
        Method(
            "ff",
            "forest fire",
            "exploration",
            "nodes",
            "induced",
            ex.sample_ff,
            {
                "p": Param(0.4, _numeric(_probability(lo_open=True)), float, "burn probability"),
                "max_rekindles": _REKINDLES,
            },
        ),
        Method("cse", "community structure expansion", "exploration", "nodes", "induced", ex.sample_cse),
        Method("rnn", "random node-neighbor", "exploration", "nodes", "induced", ex.sample_rnn),
        Method("sp", "shortest path", "exploration", "nodes", "induced", ex.sample_sp, {"max_idle_steps": _IDLE}),
        Method("rw", "random walk", "exploration", "nodes", "induced", ex.sample_rw, {"max_idle_steps": _IDLE}),
        Method(
            "mhrw",
            "Metropolis-Hastings random walk",
            "exploration",
            "nodes",
            "induced",
            ex.sample_mhrw,
            {"alpha": _ALPHA, "max_idle_steps": _IDLE},
        ),
        Method(
            "rcmhrw",
            "rejection-constrained Metropolis-Hastings random walk",
            "exploration",
            "nodes",
            "induced",
            ex.sample_rcmhrw,
            {"alpha": _ALPHA, "max_idle_steps": _IDLE},
        ),
        Method(
            "nbtrw", "non-backtracking random walk", "exploration", "nodes", "induced", ex.sample_nbtrw,
            {"max_idle_steps": _IDLE},
        ),
        Method(
            "cnrw", "circulated neighbors random walk", "exploration", "nodes", "induced", ex.sample_cnrw,
            {"max_idle_steps": _IDLE},
        ),
        Method(
            "rwj",
            "random walk with jump",
            "exploration",
            "nodes",
            "induced",
            ex.sample_rwj,
            {
                "p_jump": Param(0.1, _numeric(_probability()), float, "teleport probability per step"),
                "max_idle_steps": _IDLE,
            },
        ),
        Method(
            "cnarw", "common neighbor aware random walk", "exploration", "nodes", "induced", ex.sample_cnarw,
            {"max_idle_steps": _IDLE},
        ),
        Method(
            "frw",
            "frontier of random walkers",
            "exploration",
            "nodes",
            "edges",
            ex.sample_frw,
            {"walkers": Param(10, _int_at_least(1), int, "number of walkers"), "max_idle_steps": _IDLE},
        ),
        Method(
            "rwr",
            "random walk with restart",
            "exploration",
            "nodes",
            "induced",
            ex.sample_rwr,
            {
                "p_restart": Param(0.1, _numeric(_probability(hi_open=True)), float, "return-to-seed probability per step"),
                "max_idle_steps": _IDLE,
            },
        ),
        Method("lerw", "loop-erased random walk", "exploration", "nodes", "tree", ex.sample_lerw, {"max_idle_steps": _IDLE}),
    ]
}


def method_info(name: str) -> Method:
    try:
        return METHODS[name]
    except KeyError:
        raise ValueError(f"unknown method {name!r}; expected one of {', '.join(METHODS)}") from None


@dataclass(frozen=True)
class SamplerSpec:
    """Method identifier, hyperparameters and seed.

    Missing parameters take their documented defaults; unknown names are
    rejected. Parameters are readable as attributes (``spec.p_restart``).
    """

    method: str
    params: Mapping[str, Any] = field(default_factory=dict)
    seed: int = DEFAULT_SEED

    def __post_init__(self):
        info = method_info(self.method)
        unknown = sorted(set(self.params) - set(info.params))
        if unknown:
            allowed = ", ".join(info.params) or "none"
            raise ValueError(f"unknown parameter(s) {', '.join(unknown)} for {self.method} (allowed: {allowed})")
        resolved = {}
        for name, p in info.params.items():
            value = self.params.get(name, p.default)
            resolved[name] = value if value is None else p.check(name, value)
        if isinstance(self.seed, bool) or not isinstance(self.seed, int) or not 0 <= self.seed <= SEED_MAX:
            raise ValueError(f"seed must be an integer in [0, 2**64 - 1], got {self.seed!r}")
        object.__setattr__(self, "params", MappingProxyType(resolved))

    def __getattr__(self, name):
        params = self.__dict__.get("params", {})
        if name in params:
            return params[name]
        raise AttributeError(name)

    def __hash__(self):
        return hash((self.method, tuple(sorted(self.params.items())), self.seed))

    def with_seed(self, seed: int) -> "SamplerSpec":
        return replace(self, params=dict(self.params), seed=seed)

    def sample(self, graph: Graph, target: "TargetSize | int") -> "SampleResult":
        return sample(self, graph, target)


def describe(spec: SamplerSpec) -> dict[str, Any]:
    """All hyperparameters of ``spec`` including defaults and the seed."""
    return {**spec.params, "seed": spec.seed}


def round_half_up(x: float) -> int:
    return math.floor(x + 0.5)


@dataclass(frozen=True)
class TargetSize:
    """Requested sample size: a node count, an edge count, or a fraction.

    A fraction resolves against nodes or edges depending on what the method
    counts, as ``max(1, round_half_up(f * total))``.
    """

    nodes: int | None = None
    edges: int | None = None
    fraction: float | None = None

    def __post_init__(self):
        given = [x for x in (self.nodes, self.edges, self.fraction) if x is not None]
        if len(given) != 1:
            raise ValueError("exactly one of nodes, edges or fraction must be given")
        if self.fraction is not None and not 0.0 < self.fraction <= 1.0:
            raise ValueError(f"fraction must lie in (0, 1], got {self.fraction}")
        for name in ("nodes", "edges"):
            x = getattr(self, name)
            if x is not None and (isinstance(x, bool) or not isinstance(x, int) or x < 1):
                raise ValueError(f"{name} target must be an integer >= 1, got {x!r}")

    def resolve(self, method: str, graph: Graph) -> int:
        counts = method_info(method).target
        total = graph.node_count if counts == "nodes" else graph.edge_count
        if self.fraction is not None:
            return max(1, round_half_up(self.fraction * total))
        given = "nodes" if self.nodes is not None else "edges"
        if given != counts:
            raise ValueError(f"{method} takes a target in {counts}, not {given}")
        value = self.nodes if given == "nodes" else self.edges
        if value > total:
            raise ValueError(f"target of {value} {counts} exceeds the {total} available")
        return value


@dataclass(frozen=True)
class SampleResult:
    subgraph: Subgraph
    method: str
    seed: int
    params: Mapping[str, Any]
    warnings: tuple[str, ...] = ()

    @property
    def graph(self) -> Graph:
        return self.subgraph.graph

    @property
    def node_ids(self) -> tuple[int, ...]:
        return self.subgraph.node_ids

    @property
    def nodes_sampled(self) -> int:
        return self.subgraph.node_count

    @property
    def edges_sampled(self) -> int:
        return self.subgraph.edge_count

    def edges(self):
        """Sampled edges in original node ids."""
        return self.subgraph.edges()

    def to_edge_list(self) -> str:
        return format_edges(self.edges())

    def metadata(self) -> dict[str, Any]:
        return {
            "method": self.method,
            "seed": self.seed,
            "rng": ALGORITHM,
            "params": dict(self.params),
            "nodes_sampled": self.nodes_sampled,
            "edges_sampled": self.edges_sampled,
            "nodes": list(self.node_ids),
            "warnings": list(self.warnings),
        }

    def serialize(self) -> str:
        return json.dumps(self.metadata(), sort_keys=True) + "\n" + self.to_edge_list()


def sample(spec: SamplerSpec, graph: Graph, target: TargetSize | int) -> SampleResult:
    """Validate ``graph`` and draw one sample.

    An integer ``target`` is taken in the unit the method counts (nodes, or
    edges for ``re``/``rne``/``hrne``).
    """
    validate(graph)
    info = method_info(spec.method)
    if isinstance(target, TargetSize):
        count = target.resolve(spec.method, graph)
    else:
        count = TargetSize(**{info.target: target}).resolve(spec.method, graph)
    kwargs = {k: v for k, v in spec.params.items()}
    if spec.method == "frw":
        if kwargs["walkers"] > graph.node_count:
            raise ValueError(f"walkers={kwargs['walkers']} exceeds the {graph.node_count} nodes")
        if count < 2:
            raise ValueError("frw collects traversed edges and needs a node target >= 2")
    notes: list[str] = []
    if spec.method == "prn":
        kwargs["warn"] = notes.append
    rng = RandomSource(spec.seed)
    sub = info.run(graph, count, rng, **kwargs)
    return SampleResult(sub, spec.method, spec.seed, spec.params, tuple(notes))
