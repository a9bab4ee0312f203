"""Traversal, search and random-walk samplers.

Every sampler starts from a uniform random node (frontier sampling starts
from distinct uniform nodes). Outputs follow three conventions:

* tree output (``bfs``, ``dfs``, ``lerw``): only the discovery/tree edges;
* edge-collected output (``frw``): the traversed edges and their endpoints;
* induced output (everything else): the induced subgraph on the sample.

Walk-style samplers share a stuck guard: more than ``max_idle_steps``
consecutive steps (default ``100 * n``) without a new sampled node raise
:class:`SamplingError`.
"""

from __future__ import annotations

from collections import deque
from typing import Callable

from .errors import SamplingError
from .graph import (
    Graph,
    Subgraph,
    common_neighbor_count,
    graph_from_edges,
    induced_subgraph,
    shortest_path,
    subgraph_from,
)
from .rng import RandomSource

IDLE_FACTOR = 100

Stepper = Callable[[int], int]


def idle_limit(graph: Graph, max_idle_steps: int | None) -> int:
    return IDLE_FACTOR * graph.node_count if max_idle_steps is None else max_idle_steps


def _stuck(method: str, limit: int, have: int, want: int) -> SamplingError:
    return SamplingError(method, "stuck-guard", f"{limit} steps without a new node ({have}/{want} nodes sampled)")


def _unsampled_node(n: int, sampled, rng: RandomSource) -> int:
    # rejection keeps the draw uniform over unsampled nodes
    v = rng.below(n)
    while v in sampled:
        v = rng.below(n)
    return v


# -- traversals -------------------------------------------------------------


def sample_bfs(graph: Graph, node_target: int, rng: RandomSource) -> Subgraph:
    adj = graph.adjacency
    start = rng.below(graph.node_count)
    found = {start}
    tree = []
    queue = deque([start])
    while queue and len(found) < node_target:
        u = queue.popleft()
        for v in rng.shuffled(adj[u]):
            if v in found:
                continue
            found.add(v)
            tree.append((u, v))
            queue.append(v)
            if len(found) == node_target:
                break
    return subgraph_from(found, tree)


def sample_dfs(graph: Graph, node_target: int, rng: RandomSource) -> Subgraph:
    adj = graph.adjacency
    start = rng.below(graph.node_count)
    found = {start}
    tree = []
    stack = [(start, iter(rng.shuffled(adj[start])))]
    while stack and len(found) < node_target:
        u, pending = stack[-1]
        for v in pending:
            if v not in found:
                found.add(v)
                tree.append((u, v))
                stack.append((v, iter(rng.shuffled(adj[v]))))
                break
        else:
            stack.pop()
    return subgraph_from(found, tree)


def rekindling_search(
    graph: Graph,
    node_target: int,
    rng: RandomSource,
    method: str,
    max_rekindles: int,
    spread: Callable[[int, list[int]], list[int]],
    start: int | None = None,
) -> list[int]:
    """Queue-driven spread with restarts; returns nodes in sampling order.

    ``spread(u, unvisited)`` picks which unvisited neighbors of ``u`` join
    the sample. When the queue empties early a new fire is lit at a uniform
    unsampled node. The rekindle guard counts consecutive fires that reached
    nothing beyond their own seed.
    """
    n = graph.node_count
    adj = graph.adjacency
    seed = rng.below(n) if start is None else start
    sampled = {seed}
    order = [seed]
    queue = deque(order)
    fire_size = 1
    dead_streak = 0
    while len(order) < node_target:
        if not queue:
            dead_streak = dead_streak + 1 if fire_size == 1 else 0
            if dead_streak > max_rekindles:
                raise SamplingError(method, "rekindle-guard", f"{dead_streak} consecutive fires died at their seed")
            seed = _unsampled_node(n, sampled, rng)
            sampled.add(seed)
            order.append(seed)
            queue.append(seed)
            fire_size = 1
            continue
        u = queue.popleft()
        unvisited = [w for w in adj[u] if w not in sampled]
        if not unvisited:
            continue
        for w in spread(u, unvisited):
            sampled.add(w)
            order.append(w)
            queue.append(w)
            fire_size += 1
            if len(order) == node_target:
                break
    return order


def snowball_spread(k: int, rng: RandomSource):
    return lambda u, unvisited: rng.sample(unvisited, min(k, len(unvisited)))


def burn_count(available: int, p: float, rng: RandomSource) -> int:
    """Geometric count of neighbors to ignite (mean ``p / (1 - p)``), capped at ``available``."""
    x = 0
    while x < available and rng.uniform() < p:
        x += 1
    return x


def fire_spread(p: float, rng: RandomSource):
    return lambda u, unvisited: rng.sample(unvisited, burn_count(len(unvisited), p, rng))


def sample_sb(
    graph: Graph, node_target: int, rng: RandomSource, k: int = 50, max_rekindles: int = 100
) -> Subgraph:
    order = rekindling_search(graph, node_target, rng, "sb", max_rekindles, snowball_spread(k, rng))
    return induced_subgraph(graph, order)


def sample_ff(
    graph: Graph, node_target: int, rng: RandomSource, p: float = 0.4, max_rekindles: int = 100
) -> Subgraph:
    order = rekindling_search(graph, node_target, rng, "ff", max_rekindles, fire_spread(p, rng))
    return induced_subgraph(graph, order)


def expansion_order(graph: Graph, node_target: int, rng: RandomSource, start: int | None = None) -> list[int]:
    """Greedy expansion: add the frontier node with the most unknown neighbors.

    A node is known once it is sampled or adjacent to a sampled node. Ties
    are broken uniformly.
    """
    adj = graph.adjacency
    if start is None:
        start = rng.below(graph.node_count)
    sampled = {start}
    order = [start]
    known = {start, *adj[start]}
    score = {c: sum(1 for w in adj[c] if w not in known) for c in adj[start]}
    while len(sampled) < node_target:
        best = max(score.values())
        ties = sorted(c for c, s in score.items() if s == best)
        c = ties[rng.below(len(ties))]
        sampled.add(c)
        order.append(c)
        del score[c]
        fresh = [w for w in adj[c] if w not in known]
        known.update(fresh)
        for x in fresh:
            for y in adj[x]:
                if y in score:
                    score[y] -= 1
        for x in fresh:
            score[x] = sum(1 for w in adj[x] if w not in known)
    return order


def sample_cse(graph: Graph, node_target: int, rng: RandomSource) -> Subgraph:
    return induced_subgraph(graph, expansion_order(graph, node_target, rng))


def sample_rnn(graph: Graph, node_target: int, rng: RandomSource) -> Subgraph:
    n = graph.node_count
    sampled: set[int] = set()
    while len(sampled) < node_target:
        v = _unsampled_node(n, sampled, rng)
        sampled.add(v)
        sampled.update(graph.adjacency[v])
    return induced_subgraph(graph, sampled)


def sample_sp(
    graph: Graph, node_target: int, rng: RandomSource, max_idle_steps: int | None = None
) -> Subgraph:
    n = graph.node_count
    limit = idle_limit(graph, max_idle_steps)
    sampled: set[int] = set()
    idle = 0
    while len(sampled) < node_target:
        u = rng.below(n)
        v = rng.below(n - 1)
        if v >= u:
            v += 1
        before = len(sampled)
        sampled.update(shortest_path(graph, u, v, rng))
        if len(sampled) == before:
            idle += 1
            if idle > limit:
                raise _stuck("sp", limit, before, node_target)
        else:
            idle = 0
    return induced_subgraph(graph, sampled)


# -- random walks -------------------------------------------------------------


def _rw(graph: Graph, rng: RandomSource, start: int) -> Stepper:
    adj = graph.adjacency

    def step(u):
        nbrs = adj[u]
        return nbrs[rng.below(len(nbrs))]

    return step


def _rwr(graph, rng, start, p_restart=0.1) -> Stepper:
    walk = _rw(graph, rng, start)

    def step(u):
        if rng.uniform() < p_restart:
            return start
        return walk(u)

    return step


def _rwj(graph, rng, start, p_jump=0.1) -> Stepper:
    walk = _rw(graph, rng, start)
    n = graph.node_count

    def step(u):
        if rng.uniform() < p_jump:
            return rng.below(n)
        return walk(u)

    return step


def _mhrw(graph, rng, start, alpha=1.0) -> Stepper:
    adj = graph.adjacency

    def step(u):
        nbrs = adj[u]
        v = nbrs[rng.below(len(nbrs))]
        ratio = len(nbrs) / len(adj[v])
        if ratio >= 1.0 or rng.uniform() < ratio**alpha:
            return v
        return u

    return step


def _rcmhrw(graph, rng, start, alpha=1.0) -> Stepper:
    adj = graph.adjacency

    def step(u):
        du = len(adj[u])
        untried = list(adj[u])
        while untried:
            v = untried.pop(rng.below(len(untried)))
            ratio = du / len(adj[v])
            if ratio >= 1.0 or rng.uniform() < ratio**alpha:
                return v
        return u

    return step


def _nbtrw(graph, rng, start) -> Stepper:
    adj = graph.adjacency
    prev = [None]

    def step(u):
        nbrs = adj[u]
        back = prev[0]
        if back is None or len(nbrs) == 1:
            v = nbrs[rng.below(len(nbrs))]
        else:
            # skip the previous node by drawing from deg - 1 slots
            i = rng.below(len(nbrs) - 1)
            v = nbrs[i]
            if v >= back:
                v = nbrs[i + 1]
        prev[0] = u
        return v

    return step


class NeighborQueue:
    """Circular queue over a node's neighbors, reshuffled at each new cycle."""

    def __init__(self, neighbors, rng: RandomSource):
        self._neighbors = neighbors
        self._rng = rng
        self._order = rng.shuffled(neighbors)
        self._cursor = 0

    def pop(self) -> int:
        if self._cursor == len(self._order):
            self._order = self._rng.shuffled(self._neighbors)
            self._cursor = 0
        v = self._order[self._cursor]
        self._cursor += 1
        return v


def _cnrw(graph, rng, start) -> Stepper:
    adj = graph.adjacency
    queues: dict[int, NeighborQueue] = {}

    def step(u):
        q = queues.get(u)
        if q is None:
            q = queues[u] = NeighborQueue(adj[u], rng)
        return q.pop()

    return step


def overlap_weights(graph: Graph, u: int) -> list[float]:
    """``1 - |N(u) & N(w)| / min(deg u, deg w)`` for each neighbor ``w`` of ``u``."""
    adj = graph.adjacency
    du = len(adj[u])
    return [1.0 - common_neighbor_count(adj[u], adj[w]) / min(du, len(adj[w])) for w in adj[u]]


def _cnarw(graph, rng, start) -> Stepper:
    adj = graph.adjacency
    cache: dict[int, list[float]] = {}

    def step(u):
        weights = cache.get(u)
        if weights is None:
            weights = cache[u] = overlap_weights(graph, u)
        nbrs = adj[u]
        if sum(weights) > 0.0:
            return nbrs[rng.weighted_index(weights)]
        return nbrs[rng.below(len(nbrs))]

    return step


STEPPERS = {
    "rw": _rw,
    "rwr": _rwr,
    "rwj": _rwj,
    "mhrw": _mhrw,
    "rcmhrw": _rcmhrw,
    "nbtrw": _nbtrw,
    "cnrw": _cnrw,
    "cnarw": _cnarw,
}


def walk_trajectory(
    method: str, graph: Graph, steps: int, rng: RandomSource, start: int | None = None, **params
) -> list[int]:
    """Positions of a single walker, ``steps + 1`` entries including the start."""
    if start is None:
        start = rng.below(graph.node_count)
    step = STEPPERS[method](graph, rng, start, **params)
    path = [start]
    u = start
    for _ in range(steps):
        u = step(u)
        path.append(u)
    return path


def collect_walk(
    method: str,
    graph: Graph,
    node_target: int,
    rng: RandomSource,
    max_idle_steps: int | None = None,
    start: int | None = None,
    **params,
) -> list[int]:
    """Distinct nodes in first-visit order, walking until ``node_target`` are seen."""
    limit = idle_limit(graph, max_idle_steps)
    if start is None:
        start = rng.below(graph.node_count)
    step = STEPPERS[method](graph, rng, start, **params)
    seen = {start}
    order = [start]
    u = start
    idle = 0
    while len(order) < node_target:
        u = step(u)
        if u in seen:
            idle += 1
            if idle > limit:
                raise _stuck(method, limit, len(order), node_target)
        else:
            seen.add(u)
            order.append(u)
            idle = 0
    return order


def _walk_sampler(method: str):
    def sampler(graph: Graph, node_target: int, rng: RandomSource, max_idle_steps: int | None = None, **params):
        return induced_subgraph(graph, collect_walk(method, graph, node_target, rng, max_idle_steps, **params))

    sampler.__name__ = f"sample_{method}"
    sampler.__doc__ = f"Induced subgraph on the first ``node_target`` distinct nodes of a {method} walk."
    return sampler


sample_rw = _walk_sampler("rw")
sample_rwr = _walk_sampler("rwr")
sample_rwj = _walk_sampler("rwj")
sample_mhrw = _walk_sampler("mhrw")
sample_rcmhrw = _walk_sampler("rcmhrw")
sample_nbtrw = _walk_sampler("nbtrw")
sample_cnrw = _walk_sampler("cnrw")
sample_cnarw = _walk_sampler("cnarw")


def sample_frw(
    graph: Graph,
    node_target: int,
    rng: RandomSource,
    walkers: int = 10,
    max_idle_steps: int | None = None,
) -> Subgraph:
    """Frontier sampling.

    At each step one walker is chosen with probability proportional to the
    degree of its position and moves to a uniform neighbor. Stops once the
    traversed edges touch ``node_target`` nodes.
    """
    adj = graph.adjacency
    limit = idle_limit(graph, max_idle_steps)
    positions = rng.sample(range(graph.node_count), walkers)
    touched: set[int] = set()
    traversed = set()
    idle = 0
    while len(touched) < node_target:
        i = rng.weighted_index([len(adj[x]) for x in positions])
        u = positions[i]
        v = adj[u][rng.below(len(adj[u]))]
        positions[i] = v
        traversed.add((u, v) if u < v else (v, u))
        before = len(touched)
        touched.add(u)
        touched.add(v)
        if len(touched) == before:
            idle += 1
            if idle > limit:
                raise _stuck("frw", limit, before, node_target)
        else:
            idle = 0
    return graph_from_edges(traversed)


def sample_lerw(
    graph: Graph, node_target: int, rng: RandomSource, max_idle_steps: int | None = None
) -> Subgraph:
    """Wilson's algorithm, stopped once ``node_target`` nodes are attached.

    Start nodes are taken in a seeded uniform order whose first node is the
    root. Each loop-erased path is attached from its tree end outwards, so a
    path cut short by the target still hangs off the tree. With
    ``node_target == n`` the result is a uniform spanning tree.
    """
    adj = graph.adjacency
    limit = idle_limit(graph, max_idle_steps)
    order = rng.shuffled(range(graph.node_count))
    in_tree = {order[0]}
    tree = []
    succ: dict[int, int] = {}
    for start in order[1:]:
        if len(in_tree) >= node_target:
            break
        if start in in_tree:
            continue
        u = start
        steps = 0
        while u not in in_tree:
            nbrs = adj[u]
            succ[u] = nbrs[rng.below(len(nbrs))]
            u = succ[u]
            steps += 1
            if steps > limit:
                raise _stuck("lerw", limit, len(in_tree), node_target)
        path = []
        u = start
        while u not in in_tree:
            path.append(u)
            u = succ[u]
        for x in reversed(path):
            if len(in_tree) >= node_target:
                break
            in_tree.add(x)
            tree.append((x, succ[x]))
    return subgraph_from(in_tree, tree)
