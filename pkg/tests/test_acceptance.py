"""Acceptance gate: one test per criterion, each tagged with ``criterion(n, title)``.

The terminal summary lists every criterion as PASS or FAIL.
"""

import io
import itertools
import json
import time
from collections import Counter
from contextlib import redirect_stdout

import pytest

from graphsampling import (
    METHODS,
    DegenerateStatistic,
    Graph,
    RandomSource,
    SamplerSpec,
    SamplingError,
    TargetSize,
    ValidationError,
    ValidationKind,
    average_degree,
    degree_correlation,
    dumps_edge_list,
    sample,
    transitivity,
    watts_strogatz,
)
from graphsampling.cli import main
from graphsampling.exploration import walk_trajectory
from graphsampling.generators import complete_graph, cycle_graph, path_graph, star_graph
from graphsampling.graph import is_connected, is_forest

from conftest import gof_pvalue, homogeneity_pvalue
from test_stats import brute_transitivity, naive_pearson

GRAPH_SEED = 42

criterion = pytest.mark.criterion


def ws(n, k, p):
    return watts_strogatz(n, k, p, RandomSource(GRAPH_SEED))


@criterion(1, "determinism: 25 methods x seeds 1-3 byte-identical, < 30 s")
def test_determinism():
    g = ws(200, 6, 0.1)
    target = TargetSize(fraction=0.5)
    start = time.perf_counter()

    def full_run():
        return [sample(SamplerSpec(m, seed=s), g, target).serialize() for m in METHODS for s in (1, 2, 3)]

    first, second = full_run(), full_run()
    elapsed = time.perf_counter() - start
    assert len(first) == 75
    assert first == second
    assert elapsed < 30, f"{elapsed:.1f} s"


@criterion(2, "API uniformity: every method on WS(1000,10,0) at fraction 0.5")
def test_api_uniformity():
    g = ws(1000, 10, 0.0)
    target = TargetSize(fraction=0.5)
    failures = {}
    for method in METHODS:
        try:
            result = sample(SamplerSpec(method), g, target)
        except SamplingError as exc:
            failures[method] = str(exc)
            continue
        print(f"{method}\t{transitivity(result.graph):.6f}")
    assert not failures, failures


BAD_INPUTS = {
    ValidationKind.NOT_CONNECTED: Graph.from_edges([(0, 1), (1, 2), (3, 4), (4, 5)]),
    ValidationKind.NON_CONSECUTIVE_IDS: Graph.from_edges([(0, 1), (1, 3), (3, 0)]),
    ValidationKind.SELF_LOOP: Graph.from_edges([(0, 1), (1, 2), (2, 0), (2, 2)]),
    ValidationKind.DUPLICATE_EDGE: Graph.from_edges([(0, 1), (1, 2), (2, 0), (1, 0)]),
}


@criterion(3, "validation gates for every method")
def test_validation_gates(monkeypatch):
    ran = []
    for method, info in list(METHODS.items()):
        monkeypatch.setitem(METHODS, method, info.__class__(**{**info.__dict__, "run": lambda *a, **k: ran.append(1)}))
    for method in METHODS:
        for kind, graph in BAD_INPUTS.items():
            with pytest.raises(ValidationError) as err:
                sample(SamplerSpec(method), graph, 1)
            assert err.value.kind is kind, (method, kind)
    assert ran == []


SIZE_GRAPHS = [
    path_graph(6),
    cycle_graph(7),
    complete_graph(5),
    star_graph(8),
    watts_strogatz(40, 4, 0.2, RandomSource(1)),
]


@criterion(4, "exact sizes for node and edge samplers, seeds 1-50 on 5 graphs")
def test_exact_sizes():
    for g in SIZE_GRAPHS:
        for f in (0.3, 0.5):
            want_nodes = max(1, int(f * g.node_count + 0.5))
            want_edges = max(1, int(f * g.edge_count + 0.5))
            for seed in range(1, 51):
                for method in ("rn", "rdn", "prn"):
                    assert sample(SamplerSpec(method, seed=seed), g, TargetSize(fraction=f)).nodes_sampled == want_nodes
                for method in ("re", "rne", "hrne"):
                    assert sample(SamplerSpec(method, seed=seed), g, TargetSize(fraction=f)).edges_sampled == want_edges


@criterion(5, "spanning trees from bfs/dfs/lerw on WS(500,4,0.1), < 10 s")
def test_spanning_trees():
    g = ws(500, 4, 0.1)
    start = time.perf_counter()
    for method in ("bfs", "dfs", "lerw"):
        for seed in range(1, 21):
            res = sample(SamplerSpec(method, seed=seed), g, g.node_count)
            assert res.nodes_sampled == 500 and res.edges_sampled == 499
            assert is_connected(res.graph) and is_forest(res.graph)
            assert all(g.has_edge(u, v) for u, v in res.edges())
    elapsed = time.perf_counter() - start
    assert elapsed < 10, f"{elapsed:.1f} s"


@criterion(6, "LERW uniform over the 16 spanning trees of K4, < 20 s")
def test_lerw_uniformity():
    k4 = complete_graph(4)
    trees = [
        frozenset(c)
        for c in itertools.combinations(k4.edges(), 3)
        if is_connected(Graph.from_edges(c, node_count=4))
    ]
    assert len(trees) == 4 ** (4 - 2) == 16
    runs = 32_000
    start = time.perf_counter()
    counts = Counter(frozenset(sample(SamplerSpec("lerw", seed=s), k4, 4).edges()) for s in range(runs))
    elapsed = time.perf_counter() - start
    assert set(counts) == set(trees)
    for t in trees:
        assert abs(counts[t] / runs - 1 / 16) <= 0.01
    assert gof_pvalue(counts, {t: 1 / 16 for t in trees}) > 0.01
    assert elapsed < 20, f"{elapsed:.1f} s"


@criterion(7, "MHRW uniform and RW degree-proportional occupancy on S4")
def test_walk_stationarity():
    s4 = star_graph(4)
    steps = 100_000
    mh = Counter(walk_trajectory("mhrw", s4, steps, RandomSource(1))[1:])
    for v in range(5):
        assert abs(mh[v] / steps - 0.2) <= 0.02
    rw = Counter(walk_trajectory("rw", s4, steps, RandomSource(2))[1:])
    m2 = 2 * s4.edge_count
    for v in range(5):
        assert abs(rw[v] / steps - s4.degree(v) / m2) <= 0.02
    assert abs(rw[0] / steps - 0.5) <= 0.02


@criterion(8, "statistic oracles")
def test_statistic_oracles():
    lattice = ws(1000, 10, 0.0)
    assert abs(transitivity(lattice) - 2 / 3) <= 1e-9
    assert average_degree(lattice) == 10
    assert abs(degree_correlation(path_graph(4)) + 0.5) <= 1e-10
    assert abs(degree_correlation(star_graph(4)) + 1.0) <= 1e-10
    rng = RandomSource(8)
    for _ in range(20):
        n = 5 + rng.below(36)
        density = 0.05 + 0.5 * rng.uniform()
        edges = [(u, v) for u, v in itertools.combinations(range(n), 2) if rng.uniform() < density] or [(0, 1)]
        g = Graph.from_edges(edges, node_count=n)
        assert transitivity(g) == brute_transitivity(g)
        assert average_degree(g) == sum(len(g.neighbors(v)) for v in range(n)) / n
        try:
            ours = degree_correlation(g)
        except DegenerateStatistic:
            continue
        assert abs(ours - naive_pearson(g)) <= 1e-10


@criterion(9, "rw and rwr samples at 0.5 on WS(1000,10,0.1) are connected, seeds 1-20")
def test_connectivity_preservation():
    g = ws(1000, 10, 0.1)
    for method in ("rw", "rwr"):
        for seed in range(1, 21):
            res = sample(SamplerSpec(method, seed=seed), g, TargetSize(fraction=0.5))
            assert res.nodes_sampled == 500
            assert is_connected(res.graph), (method, seed)


@criterion(10, "RW-sampled average degree >= ground truth on WS(1000,10,0.2)")
def test_walk_degree_bias():
    g = ws(1000, 10, 0.2)
    truth = average_degree(g)
    values = [
        average_degree(sample(SamplerSpec("rw", seed=s), g, TargetSize(fraction=0.5)).graph)
        for s in range(GRAPH_SEED, GRAPH_SEED + 10)
    ]
    mean = sum(values) / len(values)
    print(f"rw mean average degree {mean:.4f}, ground truth {truth:.4f}")
    assert mean >= truth


SMALL = {
    "paw": Graph.from_edges([(0, 1), (1, 2), (0, 2), (0, 3)]),
    "house": Graph.from_edges([(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)]),
}


@criterion(11, "degenerate-parameter equivalences by chi-square over 10^4 runs")
def test_degenerate_equivalences():
    pairs = [
        (SamplerSpec("rwj", {"p_jump": 0.0}), SamplerSpec("rw")),
        (SamplerSpec("rwr", {"p_restart": 0.0}), SamplerSpec("rw")),
        (SamplerSpec("hrne", {"q": 1.0}), SamplerSpec("rne")),
    ]
    runs = 10_000
    for g in SMALL.values():
        for a, b in pairs:
            left = Counter(sample(a.with_seed(s), g, 2).node_ids for s in range(runs))
            right = Counter(sample(b.with_seed(s + runs), g, 2).node_ids for s in range(runs))
            assert homogeneity_pvalue(left, right) > 0.01, (a.method, b.method)


@criterion(12, "estimate CLI on WS(1000,10,0.1) for rn/re/rw/mhrw/ff, byte-stable, < 60 s")
def test_estimation_harness(tmp_path):
    path = tmp_path / "ws.txt"
    path.write_text(dumps_edge_list(ws(1000, 10, 0.1)))
    start = time.perf_counter()
    for method in ("rn", "re", "rw", "mhrw", "ff"):
        argv = ["estimate", "--input", str(path), "--method", method, "--runs", "10", "--fraction", "0.5"]
        outputs = []
        for _ in range(2):
            buf = io.StringIO()
            with redirect_stdout(buf):
                assert main(argv) == 0
            outputs.append(buf.getvalue())
        assert outputs[0] == outputs[1]
        records = [json.loads(line) for line in outputs[0].splitlines()]
        assert [r["statistic"] for r in records] == ["transitivity", "average_degree", "degree_correlation"]
        for r in records:
            assert r["runs_used"] == 10
            for key in ("ground_truth", "mean", "std_error"):
                assert isinstance(r[key], float), (method, r)
    elapsed = time.perf_counter() - start
    assert elapsed < 60, f"{elapsed:.1f} s"
