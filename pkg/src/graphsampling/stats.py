"""Graph-level descriptive statistics and the repeated-sampling estimator."""

from __future__ import annotations

import json
import math
import statistics as _st
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .api import SampleResult, SamplerSpec, TargetSize, sample
from .errors import DegenerateStatistic, HarnessError, SamplingError
from .graph import Graph, common_neighbor_count


def triangle_count(graph: Graph) -> int:
    adj = graph.adjacency
    closed = sum(common_neighbor_count(adj[u], adj[v]) for u, v in graph.edges())
    return closed // 3


def connected_triples(graph: Graph) -> int:
    return sum(d * (d - 1) // 2 for d in graph.degrees())


def transitivity(graph: Graph) -> float:
    """``3 * triangles / connected triples``; 0.0 when there are no triples."""
    triples = connected_triples(graph)
    if triples == 0:
        return 0.0
    return 3 * triangle_count(graph) / triples


def average_degree(graph: Graph) -> float:
    if graph.node_count == 0:
        raise DegenerateStatistic("average_degree", "graph has no nodes")
    return 2 * graph.edge_count / graph.node_count


def degree_correlation(graph: Graph) -> float:
    """Pearson correlation of endpoint degrees over both orientations of every edge.

    Sums are kept in integers and divided once at the end.
    """
    deg = graph.degrees()
    arcs = 0
    s1 = s2 = sxy = 0
    for u, v in graph.edges():
        du, dv = deg[u], deg[v]
        arcs += 2
        s1 += du + dv
        s2 += du * du + dv * dv
        sxy += 2 * du * dv
    if arcs == 0:
        raise DegenerateStatistic("degree_correlation", "graph has no edges")
    var = arcs * s2 - s1 * s1
    if var == 0:
        raise DegenerateStatistic("degree_correlation", "all edge endpoints have the same degree")
    return (arcs * sxy - s1 * s1) / var


STATISTICS: dict[str, Callable[[Graph], float]] = {
    "transitivity": transitivity,
    "average_degree": average_degree,
    "degree_correlation": degree_correlation,
}

ALIASES = {
    "transitivity": "transitivity",
    "avgdeg": "average_degree",
    "average_degree": "average_degree",
    "degcorr": "degree_correlation",
    "degree_correlation": "degree_correlation",
}


def statistic_name(name: str) -> str:
    try:
        return ALIASES[name]
    except KeyError:
        raise ValueError(f"unknown statistic {name!r}; expected one of transitivity, avgdeg, degcorr") from None


@dataclass
class StatReport:
    statistic: str
    ground_truth: float | None
    estimates: list[float | None] = field(default_factory=list)
    errors: list[str | None] = field(default_factory=list)

    @property
    def used(self) -> list[float]:
        return [x for x in self.estimates if x is not None]

    @property
    def runs_used(self) -> int:
        return len(self.used)

    @property
    def mean(self) -> float | None:
        used = self.used
        return _st.fmean(used) if used else None

    @property
    def std_error(self) -> float | None:
        used = self.used
        if not used:
            return None
        if len(used) == 1:
            return 0.0
        return _st.stdev(used) / math.sqrt(len(used))

    def record(self) -> dict:
        return {
            "statistic": self.statistic,
            "ground_truth": self.ground_truth,
            "mean": self.mean,
            "std_error": self.std_error,
            "runs_used": self.runs_used,
            "runs_failed": len(self.estimates) - self.runs_used,
        }


def estimate(
    graph: Graph,
    spec: SamplerSpec,
    target: TargetSize | int,
    runs: int,
    statistics: Iterable[str] = tuple(STATISTICS),
    on_sample: Callable[[int, SampleResult], None] | None = None,
) -> list[StatReport]:
    """Sample ``runs`` times with seeds ``spec.seed, spec.seed + 1, ...`` and
    summarize each statistic as mean and standard error.

    A failed sampling run, or a statistic undefined on one sample, leaves a
    gap for that run instead of aborting. Validation errors of the input
    graph propagate.
    """
    if isinstance(runs, bool) or not isinstance(runs, int) or runs < 1:
        raise ValueError(f"runs must be an integer >= 1, got {runs!r}")
    names = [statistic_name(s) for s in statistics]
    if not names:
        raise ValueError("at least one statistic is required")
    reports = []
    for name in names:
        try:
            truth = STATISTICS[name](graph)
        except DegenerateStatistic:
            truth = None
        reports.append(StatReport(name, truth))

    failures = 0
    for i in range(runs):
        try:
            result = sample(spec.with_seed(spec.seed + i), graph, target)
        except SamplingError as exc:
            failures += 1
            for rep in reports:
                rep.estimates.append(None)
                rep.errors.append(str(exc))
            continue
        if on_sample is not None:
            on_sample(i, result)
        for rep in reports:
            try:
                rep.estimates.append(STATISTICS[rep.statistic](result.graph))
                rep.errors.append(None)
            except DegenerateStatistic as exc:
                rep.estimates.append(None)
                rep.errors.append(str(exc))
    if failures == runs:
        raise HarnessError(f"all {runs} sampling runs failed; last error: {reports[0].errors[-1]}")
    return reports


def format_reports(reports: Iterable[StatReport], **context) -> str:
    """One JSON object per line, keys sorted, floats in shortest round-trip form."""
    lines = []
    for rep in reports:
        rec = {**context, **rep.record()}
        lines.append(json.dumps(rec, sort_keys=True))
    return "\n".join(lines) + "\n"
