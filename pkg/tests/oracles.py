"""Brute-force oracles that share no search code with the library."""

from itertools import combinations
from typing import Dict, List, Optional, Tuple

import networkx as nx

from core import MultiGraph, induced_subgraph, nash_williams_check


def has_closed_traversal(graph: MultiGraph, k: int, kind: str = "walk") -> bool:
    """Search closed walks from vertex 0 directly, one step at a time.

    A walk may use every edge twice, a trail every edge copy once. The
    traversal must cover every vertex and meet each vertex at most k times.
    """
    n = graph.n
    if n == 1:
        return True
    limit: Dict[Tuple[int, int], int] = {}
    for u, v, m in graph.edges:
        limit[(u, v)] = 2 if kind == "walk" else min(m, 2)
    used = {pair: 0 for pair in limit}
    visits = [0] * n
    visits[0] = 1

    def step(current: int) -> bool:
        for w in graph.neighbors(current):
            key = (min(current, w), max(current, w))
            if used[key] >= limit[key]:
                continue
            if w == 0 and all(visits):
                return True
            if visits[w] >= k:
                continue
            used[key] += 1
            visits[w] += 1
            if step(w):
                return True
            used[key] -= 1
            visits[w] -= 1
        return False

    return step(0)


def min_k_by_traversal(graph: MultiGraph, kind: str = "walk") -> Optional[int]:
    top = max(graph.max_degree, 1) if kind == "walk" else max(graph.max_degree // 2, 1)
    for k in range(1, top + 1):
        if has_closed_traversal(graph, k, kind):
            return k
    return None


def has_hamilton_cycle(graph: MultiGraph) -> bool:
    n = graph.n
    if n < 3:
        return False
    path = [0]
    on_path = [False] * n
    on_path[0] = True

    def extend() -> bool:
        last = path[-1]
        if len(path) == n:
            return graph.has_edge(last, 0)
        for w in graph.neighbors(last):
            if not on_path[w]:
                on_path[w] = True
                path.append(w)
                if extend():
                    return True
                path.pop()
                on_path[w] = False
        return False

    return extend()


def brute_vertex_connectivity(graph: MultiGraph) -> int:
    """Smallest vertex set whose removal disconnects G or leaves one vertex."""
    simple = graph.to_networkx()
    if graph.n < 2 or not nx.is_connected(simple):
        return 0
    for size in range(graph.n - 1):
        for cut in combinations(range(graph.n), size):
            rest = simple.copy()
            rest.remove_nodes_from(cut)
            if not nx.is_connected(rest):
                return size
    return graph.n - 1


def brute_tree_connected_parts(graph: MultiGraph, m: int) -> List[Tuple[int, ...]]:
    """Largest vertex set around each vertex whose induced subgraph passes the partition test."""
    good = set()
    for size in range(1, graph.n + 1):
        for subset in combinations(range(graph.n), size):
            if size == 1 or nash_williams_check(induced_subgraph(graph, subset), m):
                good.add(subset)
    parts = set()
    for v in range(graph.n):
        parts.add(max((s for s in good if v in s), key=len))
    return sorted(parts)
