from __future__ import annotations

from .errors import GenerationError
from .graph import Graph, is_connected
from .rng import RandomSource


def ring_lattice(n: int, k: int) -> list[set[int]]:
    adj: list[set[int]] = [set() for _ in range(n)]
    for u in range(n):
        for j in range(1, k // 2 + 1):
            v = (u + j) % n
            adj[u].add(v)
            adj[v].add(u)
    return adj


def watts_strogatz(n: int, k: int, p: float, rng: RandomSource, max_attempts: int = 100) -> Graph:
    """Connected small-world graph by ring-lattice rewiring.

    Node ``i`` starts joined to ``i +- 1 .. i +- k/2`` (mod ``n``). Then, for
    each offset ``j`` and each node ``u`` in turn, the lattice edge
    ``(u, u + j)`` is moved with probability ``p`` to ``(u, w)`` where ``w``
    is uniform among nodes that are neither ``u`` nor already adjacent to
    it. Disconnected draws are discarded and regenerated from the same
    stream, up to ``max_attempts`` times.
    """
    if k < 2 or k % 2:
        raise ValueError(f"k must be an even integer >= 2, got {k}")
    if n <= k:
        raise ValueError(f"n must exceed k, got n={n}, k={k}")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p}")

    for _ in range(max_attempts):
        adj = ring_lattice(n, k)
        if p > 0.0:
            for j in range(1, k // 2 + 1):
                for u in range(n):
                    if rng.uniform() >= p:
                        continue
                    nbrs = adj[u]
                    if len(nbrs) >= n - 1:
                        continue
                    w = rng.below(n)
                    while w == u or w in nbrs:
                        w = rng.below(n)
                    v = (u + j) % n
                    nbrs.discard(v)
                    adj[v].discard(u)
                    nbrs.add(w)
                    adj[w].add(u)
        graph = Graph(adj)
        if is_connected(graph):
            return graph
    raise GenerationError(f"no connected Watts-Strogatz graph (n={n}, k={k}, p={p}) in {max_attempts} attempts")


def path_graph(n: int) -> Graph:
    return Graph.from_edges([(i, i + 1) for i in range(n - 1)], node_count=n)


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges([(i, (i + 1) % n) for i in range(n)], node_count=n)


def complete_graph(n: int) -> Graph:
    return Graph.from_edges([(i, j) for i in range(n) for j in range(i + 1, n)], node_count=n)


def star_graph(leaves: int) -> Graph:
    """Center 0 joined to leaves ``1 .. leaves``."""
    return Graph.from_edges([(0, i) for i in range(1, leaves + 1)], node_count=leaves + 1)
