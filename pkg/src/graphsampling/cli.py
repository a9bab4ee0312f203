"""Command-line front end.

Exit codes: 0 success, 2 usage error, 3 input validation error,
4 sampling or generation error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .api import DEFAULT_SEED, METHODS, SamplerSpec, TargetSize, method_info, sample
from .errors import (
    EdgeListParseError,
    GenerationError,
    HarnessError,
    SamplingError,
    ValidationError,
    ValidationKind,
)
from .generators import watts_strogatz
from .graph import Graph, induced_subgraph
from .io import dumps_edge_list, load_edge_list
from .rng import RandomSource
from .stats import STATISTICS, DegenerateStatistic, estimate, format_reports, statistic_name

EXIT_USAGE = 2
EXIT_VALIDATION = 3
EXIT_SAMPLING = 4

STAT_LABELS = {"transitivity": "transitivity", "average_degree": "avgdeg", "degree_correlation": "degcorr"}


class UsageError(Exception):
    pass


def _parse_params(method: str, pairs: Sequence[str]) -> dict:
    info = method_info(method)
    params = {}
    for pair in pairs:
        key, sep, raw = pair.partition("=")
        if not sep:
            raise UsageError(f"--param expects key=value, got {pair!r}")
        if key not in info.params:
            allowed = ", ".join(info.params) or "none"
            raise UsageError(f"unknown parameter {key!r} for {method} (allowed: {allowed})")
        kind = info.params[key].kind
        try:
            params[key] = None if raw.lower() == "none" else kind(raw)
        except ValueError:
            raise UsageError(f"parameter {key} expects {kind.__name__}, got {raw!r}") from None
    return params


def _stat_list(text: str) -> list[str]:
    try:
        return [statistic_name(s.strip()) for s in text.split(",") if s.strip()]
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _load(path: str) -> Graph:
    try:
        return load_edge_list(path)
    except FileNotFoundError:
        raise UsageError(f"no such file: {path}") from None


def _spec(args) -> SamplerSpec:
    try:
        return SamplerSpec(args.method, _parse_params(args.method, args.param), seed=args.seed)
    except (TypeError, ValueError) as exc:
        raise UsageError(str(exc)) from None


def cmd_generate(args) -> int:
    if args.k < 2 or args.k % 2:
        raise UsageError(f"--k must be an even integer >= 2, got {args.k}")
    if args.nodes <= args.k:
        raise UsageError(f"--nodes must exceed --k, got {args.nodes} <= {args.k}")
    if not 0.0 <= args.p <= 1.0:
        raise UsageError(f"--p must lie in [0, 1], got {args.p}")
    graph = watts_strogatz(args.nodes, args.k, args.p, RandomSource(args.seed))
    with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(dumps_edge_list(graph))
    print(f"nodes {graph.node_count}\nedges {graph.edge_count}")
    return 0


def cmd_sample(args) -> int:
    spec = _spec(args)
    try:
        target = TargetSize(nodes=args.nodes, edges=args.edges, fraction=args.fraction)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    graph = _load(args.input)
    try:
        result = sample(spec, graph, target)
    except ValidationError:
        raise
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(result.to_edge_list())
    meta = result.metadata()
    with open(args.output + ".meta.json", "w", encoding="utf-8", newline="\n") as fh:
        json.dump(meta, fh, sort_keys=True)
        fh.write("\n")
    summary = {k: v for k, v in meta.items() if k != "nodes"}
    print(json.dumps(summary, sort_keys=True))
    return 0


def _compact(graph: Graph) -> Graph:
    """Drop ids that have no edge so sampled files (original ids) can be measured."""
    used = [v for v in range(graph.node_count) if graph.degree(v)]
    if len(used) < 2:
        raise ValidationError(ValidationKind.EMPTY, f"graph has {len(used)} node(s) with edges; at least 2 are required")
    return induced_subgraph(graph, used).graph


def cmd_stats(args) -> int:
    names = _stat_list(args.stats)
    graph = _compact(_load(args.input))
    for name in names:
        try:
            value = f"{STATISTICS[name](graph):.6f}"
        except DegenerateStatistic:
            value = "degenerate"
        print(f"{STAT_LABELS[name]}\t{value}")
    return 0


def cmd_estimate(args) -> int:
    if args.runs < 1:
        raise UsageError(f"--runs must be >= 1, got {args.runs}")
    names = _stat_list(args.stats)
    spec = _spec(args)
    try:
        target = TargetSize(fraction=args.fraction)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    graph = _load(args.input)
    try:
        reports = estimate(graph, spec, target, args.runs, names)
    except ValidationError:
        raise
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    sys.stdout.write(
        format_reports(reports, method=spec.method, fraction=args.fraction, seed=spec.seed, runs=args.runs)
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="graphsampling", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="write a synthetic graph as an edge list")
    gen.add_argument("--model", choices=["watts-strogatz"], default="watts-strogatz")
    gen.add_argument("--nodes", type=int, default=1000)
    gen.add_argument("--k", type=int, default=10, help="lattice degree (even)")
    gen.add_argument("--p", type=float, default=0.0, help="rewiring probability")
    gen.add_argument("--seed", type=int, default=DEFAULT_SEED)
    gen.add_argument("--output", required=True)
    gen.set_defaults(func=cmd_generate)

    smp = sub.add_parser("sample", help="sample a subgraph from an edge list")
    smp.add_argument("--method", required=True, choices=list(METHODS))
    smp.add_argument("--input", required=True)
    size = smp.add_mutually_exclusive_group(required=True)
    size.add_argument("--fraction", type=float)
    size.add_argument("--nodes", type=int)
    size.add_argument("--edges", type=int)
    smp.add_argument("--seed", type=int, default=DEFAULT_SEED)
    smp.add_argument("--param", action="append", default=[], metavar="KEY=VALUE")
    smp.add_argument("--output", required=True)
    smp.set_defaults(func=cmd_sample)

    st = sub.add_parser("stats", help="print descriptive statistics of an edge list")
    st.add_argument("--input", required=True)
    st.add_argument("--stats", default="transitivity,avgdeg,degcorr")
    st.set_defaults(func=cmd_stats)

    est = sub.add_parser("estimate", help="estimate statistics from repeated seeded samples")
    est.add_argument("--input", required=True)
    est.add_argument("--method", required=True, choices=list(METHODS))
    est.add_argument("--fraction", type=float, default=0.5)
    est.add_argument("--runs", type=int, default=10)
    est.add_argument("--seed", type=int, default=DEFAULT_SEED)
    est.add_argument("--stats", default="transitivity,avgdeg,degcorr")
    est.add_argument("--param", action="append", default=[], metavar="KEY=VALUE")
    est.set_defaults(func=cmd_estimate)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValidationError, EdgeListParseError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except (SamplingError, GenerationError, HarnessError) as exc:
        print(f"sampling failed: {exc}", file=sys.stderr)
        return EXIT_SAMPLING


if __name__ == "__main__":
    sys.exit(main())
