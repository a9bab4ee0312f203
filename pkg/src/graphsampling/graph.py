"""Immutable undirected graph with sorted adjacency, plus shared primitives.

Node ids are ``0 .. node_count - 1``. Construction only checks structural
well-formedness (ids in range, symmetric adjacency); the simple-graph and
connectivity assumptions that samplers rely on are enforced by
:func:`validate`, so that a bad input can reach the sampler gate and be
reported there.
"""

from __future__ import annotations

from bisect import bisect_left
from collections import Counter, deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ValidationError, ValidationKind
from .rng import RandomSource

Edge = tuple[int, int]


class Graph:
    __slots__ = ("_adj", "_edge_count", "_edges")

    def __init__(self, adjacency: Iterable[Iterable[int]]):
        adj = tuple(tuple(sorted(nbrs)) for nbrs in adjacency)
        n = len(adj)
        arcs: Counter[Edge] = Counter()
        loops = 0
        for u, nbrs in enumerate(adj):
            for v in nbrs:
                if not 0 <= v < n:
                    raise ValueError(f"neighbor id {v} of node {u} outside [0, {n})")
                if u == v:
                    loops += 1
                else:
                    arcs[(u, v)] += 1
        for (u, v), c in arcs.items():
            if arcs.get((v, u), 0) != c:
                raise ValueError(f"adjacency is not symmetric at edge ({u}, {v})")
        self._adj = adj
        self._edge_count = sum(arcs.values()) // 2 + loops
        self._edges: tuple[Edge, ...] | None = None

    @classmethod
    def from_edges(cls, edges: Iterable[Edge], node_count: int | None = None) -> "Graph":
        """Build from an edge iterable, keeping duplicates and self-loops as given."""
        edges = list(edges)
        if node_count is None:
            node_count = 1 + max((max(u, v) for u, v in edges), default=-1)
        adj: list[list[int]] = [[] for _ in range(node_count)]
        for u, v in edges:
            if u < 0 or v < 0:
                raise ValueError(f"negative node id in edge ({u}, {v})")
            adj[u].append(v)
            if u != v:
                adj[v].append(u)
        return cls(adj)

    @property
    def node_count(self) -> int:
        return len(self._adj)

    @property
    def edge_count(self) -> int:
        return self._edge_count

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        return self._adj

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> list[int]:
        return [len(nbrs) for nbrs in self._adj]

    def has_edge(self, u: int, v: int) -> bool:
        nbrs = self._adj[u]
        i = bisect_left(nbrs, v)
        return i < len(nbrs) and nbrs[i] == v

    def edges(self) -> tuple[Edge, ...]:
        """Every edge once as ``(u, v)`` with ``u <= v``, lexicographically sorted."""
        if self._edges is None:
            self._edges = tuple(
                (u, v) for u, nbrs in enumerate(self._adj) for v in nbrs if u <= v
            )
        return self._edges

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self._adj == other._adj

    def __hash__(self) -> int:
        return hash(self._adj)

    def __repr__(self) -> str:
        return f"Graph(node_count={self.node_count}, edge_count={self.edge_count})"


@dataclass(frozen=True)
class Subgraph:
    """A compactly re-indexed graph plus the original id of each local node.

    ``node_ids`` is ascending, so local order and original order agree.
    """

    graph: Graph
    node_ids: tuple[int, ...]

    @property
    def node_count(self) -> int:
        return self.graph.node_count

    @property
    def edge_count(self) -> int:
        return self.graph.edge_count

    def edges(self) -> list[Edge]:
        ids = self.node_ids
        return [(ids[u], ids[v]) for u, v in self.graph.edges()]


def validate(graph: Graph) -> None:
    """Raise :class:`ValidationError` unless ``graph`` is fit for sampling.

    Checks run in a fixed order so the reported kind is predictable when an
    input breaks several assumptions: size, self-loops, duplicate edges,
    unused ids, connectivity.
    """
    n = graph.node_count
    if n < 2:
        raise ValidationError(ValidationKind.EMPTY, f"graph has {n} node(s); at least 2 are required")
    adj = graph.adjacency
    for u, nbrs in enumerate(adj):
        i = bisect_left(nbrs, u)
        if i < len(nbrs) and nbrs[i] == u:
            raise ValidationError(ValidationKind.SELF_LOOP, f"node {u} has a self-loop")
    for u, nbrs in enumerate(adj):
        for a, b in zip(nbrs, nbrs[1:]):
            if a == b:
                raise ValidationError(
                    ValidationKind.DUPLICATE_EDGE, f"edge ({min(u, a)}, {max(u, a)}) is listed more than once"
                )
    for u, nbrs in enumerate(adj):
        if not nbrs:
            raise ValidationError(
                ValidationKind.NON_CONSECUTIVE_IDS,
                f"node id {u} has no incident edge; ids must be consecutive from 0 with no orphans",
            )
    seen = bfs_order(graph, 0)
    if len(seen) != n:
        reached = set(seen)
        missing = next(v for v in range(n) if v not in reached)
        raise ValidationError(
            ValidationKind.NOT_CONNECTED,
            f"node {missing} is unreachable from node 0 ({len(seen)} of {n} nodes reachable)",
        )


def bfs_order(graph: Graph, source: int) -> list[int]:
    adj = graph.adjacency
    seen = [False] * graph.node_count
    seen[source] = True
    order = [source]
    queue = deque(order)
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if not seen[v]:
                seen[v] = True
                order.append(v)
                queue.append(v)
    return order


def is_connected(graph: Graph) -> bool:
    return graph.node_count > 0 and len(bfs_order(graph, 0)) == graph.node_count


def is_forest(graph: Graph) -> bool:
    """True when the graph has no cycle (union-find over its edges)."""
    parent = list(range(graph.node_count))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in graph.edges():
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def induced_subgraph(graph: Graph, nodes: Iterable[int]) -> Subgraph:
    keep = sorted(set(nodes))
    if not keep:
        raise ValueError("induced_subgraph needs at least one node")
    n = graph.node_count
    if keep[0] < 0 or keep[-1] >= n:
        raise ValueError(f"node ids must lie in [0, {n})")
    local = {v: i for i, v in enumerate(keep)}
    adj = graph.adjacency
    sub = [[local[w] for w in adj[v] if w in local] for v in keep]
    return Subgraph(Graph(sub), tuple(keep))


def graph_from_edges(edges: Iterable[Edge]) -> Subgraph:
    """Graph on the endpoints of ``edges``; repeated edges collapse to one."""
    norm = set()
    for u, v in edges:
        if u == v:
            raise ValueError(f"self-loop ({u}, {v}) in edge set")
        norm.add((u, v) if u < v else (v, u))
    if not norm:
        raise ValueError("graph_from_edges needs at least one edge")
    ids = sorted({x for e in norm for x in e})
    local = {v: i for i, v in enumerate(ids)}
    sub = Graph.from_edges(((local[u], local[v]) for u, v in norm), node_count=len(ids))
    return Subgraph(sub, tuple(ids))


def subgraph_from(nodes: Iterable[int], edges: Iterable[Edge]) -> Subgraph:
    """Graph on exactly ``nodes`` holding exactly ``edges`` (each within ``nodes``)."""
    ids = sorted(set(nodes))
    if not ids:
        raise ValueError("subgraph_from needs at least one node")
    local = {v: i for i, v in enumerate(ids)}
    norm = {(u, v) if u < v else (v, u) for u, v in edges}
    return Subgraph(
        Graph.from_edges(((local[u], local[v]) for u, v in norm), node_count=len(ids)),
        tuple(ids),
    )


def random_neighbor(graph: Graph, v: int, rng: RandomSource) -> int:
    nbrs = graph.adjacency[v]
    return nbrs[rng.below(len(nbrs))]


def shortest_path(graph: Graph, u: int, v: int, rng: RandomSource) -> list[int]:
    """One geodesic from ``u`` to ``v``.

    Walking back from ``v``, each predecessor is drawn uniformly among the
    neighbors one BFS level closer to ``u``.
    """
    if u == v:
        return [u]
    adj = graph.adjacency
    dist = {u: 0}
    queue = deque([u])
    while queue and v not in dist:
        x = queue.popleft()
        dx = dist[x] + 1
        for y in adj[x]:
            if y not in dist:
                dist[y] = dx
                queue.append(y)
    if v not in dist:
        raise ValueError(f"node {v} is unreachable from node {u}")
    path = [v]
    x = v
    while x != u:
        level = dist[x] - 1
        preds = [w for w in adj[x] if dist.get(w) == level]
        x = preds[rng.below(len(preds))]
        path.append(x)
    path.reverse()
    return path


def common_neighbor_count(a: Sequence[int], b: Sequence[int]) -> int:
    """Size of the intersection of two sorted neighbor lists (merge walk)."""
    i = j = count = 0
    la, lb = len(a), len(b)
    while i < la and j < lb:
        x, y = a[i], b[j]
        if x == y:
            count += 1
            i += 1
            j += 1
        elif x < y:
            i += 1
        else:
            j += 1
    return count


@dataclass(frozen=True)
class PageRank:
    scores: tuple[float, ...]
    iterations: int
    converged: bool


def pagerank(
    graph: Graph, damping: float = 0.85, tolerance: float = 1e-9, max_iters: int = 100
) -> PageRank:
    """Power iteration on the uniform random-walk transition of ``graph``.

    Stops once the L1 change between iterates drops below ``tolerance``.
    When ``max_iters`` is exhausted the last iterate is returned with
    ``converged=False``.
    """
    if not 0.0 < damping < 1.0:
        raise ValueError("damping must lie in (0, 1)")
    n = graph.node_count
    if n == 0:
        raise ValueError("pagerank of an empty graph")
    adj = graph.adjacency
    deg = [len(nbrs) for nbrs in adj]
    x = [1.0 / n] * n
    teleport = (1.0 - damping) / n
    converged = False
    it = 0
    for it in range(1, max_iters + 1):
        share = [x[u] / deg[u] if deg[u] else 0.0 for u in range(n)]
        dangling = sum(x[u] for u in range(n) if not deg[u])
        base = teleport + damping * dangling / n
        new = [base + damping * sum(share[w] for w in adj[v]) for v in range(n)]
        total = sum(new)
        new = [s / total for s in new]
        change = sum(abs(a - b) for a, b in zip(new, x))
        x = new
        if change < tolerance:
            converged = True
            break
    return PageRank(tuple(x), it, converged)
