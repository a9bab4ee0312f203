"""Node selection followed by induction.

Weighted variants draw sequentially without replacement: each draw is
proportional to weight among the nodes not yet chosen.
"""

from __future__ import annotations

from typing import Callable, Sequence

from .graph import Graph, Subgraph, induced_subgraph, pagerank
from .rng import RandomSource


def sample_rn(graph: Graph, node_target: int, rng: RandomSource) -> Subgraph:
    return induced_subgraph(graph, rng.sample(range(graph.node_count), node_target))


def successive_draw(weights: Sequence[float], count: int, rng: RandomSource) -> list[int]:
    remaining = list(weights)
    chosen = []
    for _ in range(count):
        i = rng.weighted_index(remaining)
        chosen.append(i)
        remaining[i] = 0 if isinstance(remaining[i], int) else 0.0
    return chosen


def sample_rdn(graph: Graph, node_target: int, rng: RandomSource) -> Subgraph:
    return induced_subgraph(graph, successive_draw(graph.degrees(), node_target, rng))


def sample_prn(
    graph: Graph,
    node_target: int,
    rng: RandomSource,
    warn: Callable[[str], None] | None = None,
) -> Subgraph:
    pr = pagerank(graph)
    if not pr.converged and warn is not None:
        warn(f"pagerank did not converge in {pr.iterations} iterations; using last iterate")
    return induced_subgraph(graph, successive_draw(pr.scores, node_target, rng))
