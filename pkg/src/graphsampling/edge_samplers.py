from __future__ import annotations

from .errors import SamplingError
from .graph import Edge, Graph, Subgraph, graph_from_edges, induced_subgraph, subgraph_from
from .rng import RandomSource

IDLE_FACTOR = 100


def _idle_limit(graph: Graph, max_idle_steps: int | None) -> int:
    if max_idle_steps is not None:
        return max_idle_steps
    return IDLE_FACTOR * max(graph.node_count, graph.edge_count)


def sample_re(graph: Graph, edge_target: int, rng: RandomSource) -> Subgraph:
    return graph_from_edges(rng.sample(graph.edges(), edge_target))


def node_edge_draw(graph: Graph, rng: RandomSource) -> Edge:
    """Uniform node, then a uniform edge incident to it."""
    adj = graph.adjacency
    u = rng.below(graph.node_count)
    v = adj[u][rng.below(len(adj[u]))]
    return (u, v) if u < v else (v, u)


def uniform_edge_draw(graph: Graph, rng: RandomSource) -> Edge:
    edges = graph.edges()
    return edges[rng.below(len(edges))]


def hybrid_draw(graph: Graph, q: float, rng: RandomSource) -> Edge:
    if rng.uniform() < q:
        return node_edge_draw(graph, rng)
    return uniform_edge_draw(graph, rng)


def _collect_edges(graph, edge_target, draw, method, max_idle_steps) -> Subgraph:
    limit = _idle_limit(graph, max_idle_steps)
    kept: set[Edge] = set()
    idle = 0
    while len(kept) < edge_target:
        e = draw()
        if e in kept:
            idle += 1
            if idle > limit:
                raise SamplingError(
                    method, "stuck-guard", f"{limit} draws without a new edge ({len(kept)}/{edge_target} edges)"
                )
        else:
            kept.add(e)
            idle = 0
    return graph_from_edges(kept)


def sample_rne(
    graph: Graph, edge_target: int, rng: RandomSource, max_idle_steps: int | None = None
) -> Subgraph:
    return _collect_edges(graph, edge_target, lambda: node_edge_draw(graph, rng), "rne", max_idle_steps)


def sample_hrne(
    graph: Graph,
    edge_target: int,
    rng: RandomSource,
    q: float = 0.8,
    max_idle_steps: int | None = None,
) -> Subgraph:
    return _collect_edges(graph, edge_target, lambda: hybrid_draw(graph, q, rng), "hrne", max_idle_steps)


def sample_ties(graph: Graph, node_target: int, rng: RandomSource) -> Subgraph:
    """Uniform edge draws until their endpoints cover ``node_target`` nodes, then
    total induction. The last draw may overshoot the target by one node."""
    edges = graph.edges()
    m = len(edges)
    nodes: set[int] = set()
    while len(nodes) < node_target:
        u, v = edges[rng.below(m)]
        nodes.add(u)
        nodes.add(v)
    return induced_subgraph(graph, nodes)


def partial_induction(stream, node_target: int) -> tuple[set[int], list[Edge]]:
    """Consume edges in arrival order.

    Until ``node_target`` nodes are sampled every edge is kept with both
    endpoints; afterwards an edge is kept only if both endpoints are already
    sampled. Returns the sampled nodes and the kept edges in arrival order.
    """
    nodes: set[int] = set()
    kept: list[Edge] = []
    for u, v in stream:
        if len(nodes) < node_target:
            nodes.add(u)
            nodes.add(v)
            kept.append((u, v))
        elif u in nodes and v in nodes:
            kept.append((u, v))
    return nodes, kept


def sample_pies(graph: Graph, node_target: int, rng: RandomSource) -> Subgraph:
    nodes, kept = partial_induction(rng.shuffled(graph.edges()), node_target)
    return subgraph_from(nodes, kept)
