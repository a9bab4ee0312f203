import itertools
from collections import Counter

import pytest

from graphsampling import RandomSource, SamplerSpec, SamplingError, sample, watts_strogatz
from graphsampling.edge_samplers import (
    hybrid_draw,
    node_edge_draw,
    partial_induction,
    sample_hrne,
    sample_pies,
    sample_re,
    sample_rne,
    sample_ties,
    uniform_edge_draw,
)
from graphsampling.generators import complete_graph, cycle_graph, path_graph, star_graph

from conftest import gof_pvalue

SMALL_GRAPHS = {
    "p4": path_graph(4),
    "c6": cycle_graph(6),
    "k5": complete_graph(5),
    "s6": star_graph(6),
    "ws12": watts_strogatz(12, 4, 0.3, RandomSource(1)),
}


def node_edge_law(graph):
    """Exact per-draw law: uniform node, then uniform incident edge."""
    n = graph.node_count
    return {(u, v): (1 / graph.degree(u) + 1 / graph.degree(v)) / n for u, v in graph.edges()}


# -- RE ---------------------------------------------------------------------------------


def test_re_all_edges(p4):
    assert sample_re(p4, 3, RandomSource(1)).graph == p4


def test_re_single_edge_on_triangle(k3):
    rng = RandomSource(2)
    counts = Counter(tuple(sample_re(k3, 1, rng).edges()) for _ in range(30_000))
    assert gof_pvalue(counts, {((u, v),): 1 / 3 for u, v in k3.edges()}) > 0.01


def test_re_two_edges_on_c4(c4):
    # enumeration: of the 6 edge pairs, 4 share a node (3 nodes), 2 are disjoint (4 nodes)
    pairs = list(itertools.combinations(c4.edges(), 2))
    exact = Counter(len({*a, *b}) for a, b in pairs)
    assert exact == {3: 4, 4: 2}
    rng = RandomSource(3)
    counts = Counter()
    for _ in range(30_000):
        sub = sample_re(c4, 2, rng)
        assert sub.edge_count == 2
        counts[sub.node_count] += 1
    assert gof_pvalue(counts, {k: v / 6 for k, v in exact.items()}) > 0.01


# -- RNE / HRNE ---------------------------------------------------------------------------


def test_rne_whole_star(s4):
    assert sample_rne(s4, 4, RandomSource(1)).graph == s4


def test_rne_single_draw_star(s4):
    law = node_edge_law(s4)
    assert all(p == pytest.approx(0.25) for p in law.values())
    rng = RandomSource(4)
    counts = Counter(node_edge_draw(s4, rng) for _ in range(40_000))
    assert gof_pvalue(counts, law) > 0.01


def test_rne_single_draw_paw(paw):
    rng = RandomSource(5)
    counts = Counter(node_edge_draw(paw, rng) for _ in range(60_000))
    assert gof_pvalue(counts, node_edge_law(paw)) > 0.01


def test_rne_determinism():
    g = watts_strogatz(40, 4, 0.2, RandomSource(1))
    assert sample_rne(g, 30, RandomSource(9)).edges() == sample_rne(g, 30, RandomSource(9)).edges()


def test_hrne_q1_matches_rne_law(paw):
    rng = RandomSource(6)
    counts = Counter(hybrid_draw(paw, 1.0, rng) for _ in range(60_000))
    assert gof_pvalue(counts, node_edge_law(paw)) > 0.01


def test_hrne_q0_is_uniform_edge(paw):
    rng = RandomSource(7)
    counts = Counter(hybrid_draw(paw, 0.0, rng) for _ in range(60_000))
    assert gof_pvalue(counts, {e: 0.25 for e in paw.edges()}) > 0.01
    assert Counter(uniform_edge_draw(paw, rng) for _ in range(100)).keys() <= set(paw.edges())


def test_hrne_half_on_star(s4):
    rng = RandomSource(8)
    counts = Counter(hybrid_draw(s4, 0.5, rng) for _ in range(40_000))
    assert gof_pvalue(counts, {e: 0.25 for e in s4.edges()}) > 0.01


def test_hrne_mixture_law_on_paw(paw):
    q = 0.3
    ne = node_edge_law(paw)
    exact = {e: q * ne[e] + (1 - q) / 4 for e in paw.edges()}
    rng = RandomSource(10)
    counts = Counter(hybrid_draw(paw, q, rng) for _ in range(60_000))
    assert gof_pvalue(counts, exact) > 0.01


@pytest.mark.parametrize("seed", range(1, 6))
def test_collect_stuck_guard(k4, seed):
    with pytest.raises(SamplingError) as err:
        sample_rne(k4, 6, RandomSource(seed), max_idle_steps=0)
    assert err.value.guard == "stuck-guard"
    with pytest.raises(SamplingError):
        sample_hrne(k4, 6, RandomSource(seed), max_idle_steps=0)


@pytest.mark.parametrize("method", ["re", "rne", "hrne"])
@pytest.mark.parametrize("name", SMALL_GRAPHS)
def test_exact_edge_count(method, name):
    g = SMALL_GRAPHS[name]
    target = max(1, g.edge_count // 2)
    for seed in range(1, 51):
        res = sample(SamplerSpec(method, seed=seed), g, target)
        assert res.edges_sampled == target
        assert all(g.has_edge(u, v) for u, v in res.edges())
        assert min(res.graph.degrees()) >= 1


# -- TIES -------------------------------------------------------------------------------


def replay_ties_draws(graph, node_target, seed):
    """Re-run the edge draws of a seeded TIES call."""
    rng = RandomSource(seed)
    edges = graph.edges()
    nodes, drawn = set(), []
    while len(nodes) < node_target:
        e = edges[rng.below(len(edges))]
        drawn.append(e)
        nodes.update(e)
    return nodes, drawn


def test_ties_k4_three_nodes(k4):
    for seed in range(1, 101):
        sub = sample_ties(k4, 3, RandomSource(seed))
        # the second draw can be disjoint from the first, giving all four nodes
        assert sub.node_count in (3, 4)
        if sub.node_count == 3:
            assert sub.edge_count == 3


def test_ties_p4(p4):
    assert sample_ties(p4, 4, RandomSource(1)).graph == p4


@pytest.mark.parametrize("name", SMALL_GRAPHS)
def test_ties_matches_induction_oracle(name):
    g = SMALL_GRAPHS[name]
    target = max(2, g.node_count // 2)
    for seed in range(1, 101):
        res = sample(SamplerSpec("ties", seed=seed), g, target)
        nodes, drawn = replay_ties_draws(g, target, seed)
        assert set(res.node_ids) == nodes
        assert target <= len(nodes) <= target + 1
        brute = {(u, v) for u, v in g.edges() if u in nodes and v in nodes}
        assert set(res.edges()) == brute
        assert set(drawn) <= set(res.edges())
        assert min(res.graph.degrees()) >= 1


# -- PIES -------------------------------------------------------------------------------


def test_pies_p4_every_order(p4):
    for order in itertools.permutations(p4.edges()):
        nodes, kept = partial_induction(order, 4)
        assert nodes == {0, 1, 2, 3}
        assert sorted(kept) == list(p4.edges())


def test_pies_k3(k3):
    for seed in range(20):
        assert sample_pies(k3, 3, RandomSource(seed)).graph == k3


@pytest.mark.parametrize("name", SMALL_GRAPHS)
def test_pies_budget_and_partial_induction(name):
    g = SMALL_GRAPHS[name]
    target = max(2, g.node_count // 2)
    for seed in range(1, 101):
        res = sample(SamplerSpec("pies", seed=seed), g, target)
        assert target <= res.nodes_sampled <= target + 1
        assert set(res.edges()) <= set(g.edges())
        assert min(res.graph.degrees()) >= 1
        # instrumented replay of the stream
        stream = RandomSource(seed).shuffled(g.edges())
        sampled = set()
        kept = set()
        for u, v in stream:
            if len(sampled) < target:
                sampled.update((u, v))
                kept.add((u, v))
            elif u in sampled and v in sampled:
                kept.add((u, v))
        assert kept == set(res.edges())
        assert sampled == set(res.node_ids)
