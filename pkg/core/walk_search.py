"""Exact search for closed spanning walks and trails with per-vertex visit caps.

The search assigns a multiplicity to every vertex pair of G in turn and
backtracks. Pairs are ordered by a DFS preorder so that vertices are closed
off early, which lets the parity test prune.
"""

from typing import List, Mapping, Optional, Tuple, Union

import networkx as nx

from .certificates import TRAIL, WALK, EulerianCertificate, validate_certificate
from .constants import DEADLINE_CHECK_INTERVAL
from .deadline import check_deadline
from .errors import InternalError, PreconditionError
from .graph import Edge, MultiGraph, is_connected
from .logger import logger

CapSpec = Union[int, Mapping[int, int], None]


def resolve_caps(graph: MultiGraph, caps: CapSpec) -> List[int]:
    """Per-vertex visit limits.

    Args:
        graph: Host graph
        caps: One limit for all vertices, a partial mapping, or None. Vertices
            without a limit are bounded only by their degree.

    Raises:
        PreconditionError: If a limit is below 1
    """
    unbounded = [max(graph.degree(v), 1) for v in graph.vertices]
    if caps is None:
        return unbounded
    if isinstance(caps, int):
        resolved = [caps] * graph.n
    else:
        resolved = list(unbounded)
        for v, cap in caps.items():
            if not 0 <= v < graph.n:
                raise PreconditionError(f"cap given for unknown vertex {v}")
            resolved[v] = int(cap)
    if any(cap < 1 for cap in resolved):
        raise PreconditionError("visit caps must be at least 1")
    return resolved


def _bipartite_cap_bound(graph: MultiGraph, caps: List[int]) -> bool:
    """Necessary condition on bipartite hosts.

    A closed walk alternates sides, so both sides are met equally often; the
    caps of one side must cover at least one visit per vertex of the other.
    """
    simple = graph.to_networkx()
    if not nx.is_bipartite(simple):
        return True
    left, right = nx.bipartite.sets(simple)
    return sum(caps[v] for v in left) >= len(right) and sum(caps[v] for v in right) >= len(left)


class _BoundedWalkSearch:
    """Backtracking over pair multiplicities for one (graph, caps, kind)."""

    def __init__(self, graph: MultiGraph, caps: List[int], kind: str) -> None:
        self.n = graph.n
        self.upper = [2 * cap for cap in caps]
        order = list(nx.dfs_preorder_nodes(graph.to_networkx(), 0))
        pos = {v: i for i, v in enumerate(order)}
        self.pairs: List[Edge] = sorted(
            graph.pairs, key=lambda e: (max(pos[e[0]], pos[e[1]]), min(pos[e[0]], pos[e[1]]))
        )
        if kind == TRAIL:
            self.limits = [min(graph.multiplicity(u, v), 2) for u, v in self.pairs]
        else:
            self.limits = [2] * len(self.pairs)
        self.open = [0] * self.n
        for (u, v), limit in zip(self.pairs, self.limits):
            self.open[u] += limit
            self.open[v] += limit
        self.deg = [0] * self.n
        self.values = [0] * len(self.pairs)
        self.nodes = 0

    def _fits(self, w: int, x: int) -> bool:
        d = self.deg[w] + x
        if d > self.upper[w]:
            return False
        if self.open[w] == 0:
            return d >= 2 and d % 2 == 0
        return d + self.open[w] >= 2

    def _spanning_after_zero(self, i: int) -> bool:
        """Chosen pairs before i plus undecided pairs after i still connect V."""
        root = list(range(self.n))

        def find(x: int) -> int:
            while root[x] != x:
                root[x] = root[root[x]]
                x = root[x]
            return x

        parts = self.n
        for j, (u, v) in enumerate(self.pairs):
            if j == i or (j < i and not self.values[j]):
                continue
            ru, rv = find(u), find(v)
            if ru != rv:
                root[ru] = rv
                parts -= 1
                if parts == 1:
                    return True
        return parts == 1

    def extend(self, i: int) -> bool:
        self.nodes += 1
        if self.nodes % DEADLINE_CHECK_INTERVAL == 0:
            check_deadline()
        if i == len(self.pairs):
            return True

        u, v = self.pairs[i]
        limit = self.limits[i]
        self.open[u] -= limit
        self.open[v] -= limit
        for x in (1, 0, 2):
            if x > limit or not (self._fits(u, x) and self._fits(v, x)):
                continue
            if x == 0 and not self._spanning_after_zero(i):
                continue
            self.values[i] = x
            self.deg[u] += x
            self.deg[v] += x
            if self.extend(i + 1):
                return True
            self.deg[u] -= x
            self.deg[v] -= x
            self.values[i] = 0
        self.open[u] += limit
        self.open[v] += limit
        return False


def find_bounded_walk(
    graph: MultiGraph, caps: CapSpec = None, kind: str = WALK
) -> Optional[EulerianCertificate]:
    """A closed spanning walk (or trail) meeting each vertex at most caps(v) times.

    The search is complete: None means no such walk exists.

    Args:
        graph: Host graph
        caps: Visit limits (see resolve_caps)
        kind: 'walk' (edges used at most twice) or 'trail' (each edge copy once)

    Returns:
        A certificate, or None if G is disconnected or no walk fits the caps

    Raises:
        PreconditionError: For an empty graph, bad caps or an unknown kind
    """
    if kind not in (WALK, TRAIL):
        raise PreconditionError(f"unknown walk kind '{kind}'")
    if graph.n == 0:
        raise PreconditionError("the empty graph has no spanning closed walk")
    limits = resolve_caps(graph, caps)
    if graph.n == 1:
        return EulerianCertificate(graph, (), kind)
    if not is_connected(graph):
        return None
    if not _bipartite_cap_bound(graph, limits):
        return None

    search = _BoundedWalkSearch(graph, limits, kind)
    found = search.extend(0)
    logger.debug(f"{kind} search on {graph}: {search.nodes} nodes, found={found}")
    if not found:
        return None

    cert = EulerianCertificate(
        graph, tuple((u, v, m) for (u, v), m in zip(search.pairs, search.values)), kind
    )
    problems = validate_certificate(cert)
    if problems:
        raise InternalError(f"search produced an invalid certificate: {problems[0]}")
    return cert


def minimum_walk(
    graph: MultiGraph, kind: str = WALK, max_k: Optional[int] = None
) -> Optional[Tuple[int, EulerianCertificate]]:
    """Least k with a k-walk (or k-trail), together with its certificate.

    Walks need at most max degree visits; a trail meets v at most deg(v)/2 times.

    Returns:
        (k, certificate), or None when no k up to the limit works

    Raises:
        PreconditionError: If G is empty or disconnected
    """
    if graph.n == 0 or not is_connected(graph):
        raise PreconditionError("minimum walks need a connected graph")
    if graph.n == 1:
        return 1, EulerianCertificate(graph, (), kind)

    top = max(graph.max_degree, 1) if kind == WALK else max(graph.max_degree // 2, 1)
    if max_k is not None:
        top = min(top, max_k)
    for k in range(1, top + 1):
        cert = find_bounded_walk(graph, k, kind)
        if cert is not None:
            return k, cert
    return None


def min_walk_number(graph: MultiGraph) -> int:
    """Least k such that G has a k-walk.

    Raises:
        InternalError: If no walk was found (doubling a spanning tree always works)
    """
    result = minimum_walk(graph, WALK)
    if result is None:
        raise InternalError(f"no k-walk found for connected graph {graph}")
    return result[0]


def min_trail_number(graph: MultiGraph) -> Optional[int]:
    """Least k such that G has a k-trail, or None if G has no spanning closed trail."""
    result = minimum_walk(graph, TRAIL)
    return None if result is None else result[0]
