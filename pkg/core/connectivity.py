"""Vertex connectivity, contractible edges and Halin's structure lemmas.

Connectivity of a multigraph is that of its underlying simple graph, and
k-connectivity requires at least k + 1 vertices.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional, Tuple

import networkx as nx

from .errors import InternalError, PreconditionError, UnsupportedParameterError
from .graph import Edge, MultiGraph, as_vertex_set, contract_edge, delete_edge, normalize_edge
from .logger import logger


def vertex_connectivity(graph: MultiGraph) -> int:
    """Fewest vertices whose removal disconnects G or leaves one vertex.

    K_n gives n - 1; a disconnected graph gives 0.
    """
    if graph.n < 2:
        return 0
    simple = graph.to_networkx()
    if not nx.is_connected(simple):
        return 0
    return nx.node_connectivity(simple)


def is_k_connected(graph: MultiGraph, k: int) -> bool:
    """At least k + 1 vertices and no vertex cut smaller than k."""
    return graph.n >= k + 1 and vertex_connectivity(graph) >= k


def is_contractible_edge(graph: MultiGraph, edge: Iterable[int]) -> bool:
    """True if G/e is still 3-connected (so it keeps at least 4 vertices).

    Raises:
        EdgeNotFoundError: If e is not an edge of G
    """
    contracted = contract_edge(graph, tuple(edge))
    return contracted.n >= 4 and vertex_connectivity(contracted) >= 3


def is_minimally_3_connected(graph: MultiGraph) -> bool:
    """3-connected, and deleting any single edge destroys 3-connectivity."""
    if not is_k_connected(graph, 3):
        return False
    for pair in graph.pairs:
        if is_k_connected(delete_edge(graph, pair), 3):
            return False
    return True


def v3_vertices(graph: MultiGraph) -> List[int]:
    """V_3(G): the vertices of degree exactly 3."""
    return [v for v in graph.vertices if graph.degree(v) == 3]


@dataclass(frozen=True)
class HalinCheck:
    """Outcome of one structural property: 'pass', 'fail' or 'skip'."""

    name: str
    status: str
    witness: Any = None
    detail: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "status": self.status,
            "witness": list(self.witness) if isinstance(self.witness, tuple) else self.witness,
            "detail": self.detail,
        }


@dataclass(frozen=True)
class HalinReport:
    """Per-graph results of the five Halin property checks."""

    graph_id: str
    checks: Tuple[HalinCheck, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(check.status != "fail" for check in self.checks)

    def check(self, name: str) -> HalinCheck:
        for item in self.checks:
            if item.name == name:
                return item
        raise KeyError(name)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "graph_id": self.graph_id,
            "passed": self.passed,
            "checks": [check.to_dict() for check in self.checks],
        }


def _cycle_with_one_v3(graph: MultiGraph, v3: List[int]) -> Optional[List[int]]:
    """A cycle holding fewer than two vertices of V_3, if there is one."""
    low = set(v3)
    high = [v for v in graph.vertices if v not in low]
    forest = graph.to_networkx().subgraph(high)
    try:
        cycle_edges = nx.find_cycle(forest)
        return [u for u, _ in cycle_edges] + [cycle_edges[0][0]]
    except nx.NetworkXNoCycle:
        pass

    for v in v3:
        seen: List[int] = []
        for w in graph.neighbors(v):
            if w in low:
                continue
            for start in seen:
                if nx.has_path(forest, start, w):
                    return [v] + nx.shortest_path(forest, start, w) + [v]
            seen.append(w)
    return None


def verify_halin_properties(graph: MultiGraph, graph_id: str = "") -> HalinReport:
    """Evaluate Halin's lemmas exhaustively on a minimally 3-connected graph.

    Checks: deg3-has-contractible-edge (skipped for K_4), V3-nonempty,
    high-high-edges-contractible, contraction-preserves-minimality,
    cycle-has-two-V3. A failure means a bug; its witness is the offending
    vertex, edge or cycle.

    Raises:
        PreconditionError: If G is not minimally 3-connected
    """
    if not is_minimally_3_connected(graph):
        raise PreconditionError("Halin properties need a minimally 3-connected graph")

    contractible: Dict[Edge, bool] = {}

    def contractible_pair(u: int, v: int) -> bool:
        key = normalize_edge((u, v))
        if key not in contractible:
            contractible[key] = is_contractible_edge(graph, key)
        return contractible[key]

    v3 = v3_vertices(graph)
    low = set(v3)
    checks: List[HalinCheck] = []

    if graph.n == 4:
        checks.append(HalinCheck("deg3-has-contractible-edge", "skip", detail="K_4 is excluded"))
    else:
        bad = [v for v in v3 if not any(contractible_pair(v, w) for w in graph.neighbors(v))]
        if bad:
            checks.append(HalinCheck("deg3-has-contractible-edge", "fail", bad[0],
                                     "degree-3 vertex with no contractible edge"))
        else:
            checks.append(HalinCheck("deg3-has-contractible-edge", "pass"))

    if v3:
        checks.append(HalinCheck("V3-nonempty", "pass", detail=f"{len(v3)} vertices of degree 3"))
    else:
        min_vertex = min(graph.vertices, key=graph.degree)
        checks.append(HalinCheck("V3-nonempty", "fail", min_vertex, "no vertex of degree 3"))

    high_edges = [(u, v) for u, v in graph.pairs if u not in low and v not in low]
    blocked = next((e for e in high_edges if not contractible_pair(*e)), None)
    if blocked is None:
        checks.append(HalinCheck("high-high-edges-contractible", "pass",
                                 detail=f"{len(high_edges)} edges checked"))
    else:
        checks.append(HalinCheck("high-high-edges-contractible", "fail", blocked,
                                 "edge between vertices of degree >= 4 is not contractible"))

    not_minimal = next(
        (e for e in high_edges if not is_minimally_3_connected(contract_edge(graph, e))), None
    )
    if not_minimal is None:
        checks.append(HalinCheck("contraction-preserves-minimality", "pass"))
    else:
        checks.append(HalinCheck("contraction-preserves-minimality", "fail", not_minimal,
                                 "contraction is not minimally 3-connected"))

    cycle = _cycle_with_one_v3(graph, v3)
    if cycle is None:
        checks.append(HalinCheck("cycle-has-two-V3", "pass"))
    else:
        checks.append(HalinCheck("cycle-has-two-V3", "fail", tuple(cycle),
                                 "cycle with fewer than two degree-3 vertices"))

    report = HalinReport(graph_id, tuple(checks))
    if not report.passed:
        logger.error(f"Halin check failed on {graph_id or graph}")
    return report


def _is_valid_cycle(graph: MultiGraph, cycle: List[int], targets: Iterable[int]) -> bool:
    if len(cycle) < 4 or cycle[0] != cycle[-1]:
        return False
    ring = cycle[:-1]
    if len(set(ring)) != len(ring):
        return False
    if any(not graph.has_edge(a, b) for a, b in zip(cycle, cycle[1:])):
        return False
    return set(targets) <= set(ring)


def cycle_through(graph: MultiGraph, targets: Iterable[int]) -> List[int]:
    """A cycle of a 3-connected graph through up to three given vertices.

    Two internally disjoint a-b paths give a cycle through a and b; a third
    target c off that cycle is joined by a 3-fan, and the fan replaces a cycle
    arc that holds neither a nor b in its interior.

    Returns:
        Closed vertex sequence (first == last)

    Raises:
        UnsupportedParameterError: If more than three targets are given
        InternalError: If no cycle was found (G was not 3-connected)
    """
    wanted = as_vertex_set(targets, graph.n)
    if len(wanted) > 3:
        raise UnsupportedParameterError("cycles through more than three vertices are not supported")
    if graph.n < 3:
        raise InternalError("graph too small to contain a cycle")

    simple = graph.to_networkx()
    a = wanted[0] if wanted else 0
    if len(wanted) >= 2:
        b = wanted[1]
    else:
        b = min(graph.neighbors(a), default=None)
        if b is None:
            raise InternalError(f"vertex {a} is isolated")

    paths = list(nx.node_disjoint_paths(simple, a, b, cutoff=2))
    if len(paths) < 2:
        raise InternalError(f"no two disjoint paths between {a} and {b}")
    cycle = list(paths[0]) + list(reversed(paths[1]))[1:]

    if len(wanted) == 3 and wanted[2] not in cycle:
        c = wanted[2]
        ring = cycle[:-1]
        on_ring = {x: i for i, x in enumerate(ring)}
        sink = ("sink",)
        aux = simple.copy()
        aux.add_edges_from((x, sink) for x in ring)
        fans = []
        for path in nx.node_disjoint_paths(aux, c, sink, cutoff=3):
            stop = next(i for i in range(1, len(path)) if path[i] in on_ring)
            fans.append(list(path[: stop + 1]))
        if len(fans) < 3:
            raise InternalError(f"no 3-fan from {c} to the cycle")

        fan_by_end = {on_ring[p[-1]]: p for p in fans}
        ends = sorted(fan_by_end)
        size = len(ring)
        keep_out = {on_ring[a], on_ring[b]}
        for i in range(3):
            s, t = ends[i], ends[(i + 1) % 3]
            interior = set()
            j = (s + 1) % size
            while j != t:
                interior.add(j)
                j = (j + 1) % size
            if interior & keep_out:
                continue
            kept = []
            j = t
            while True:
                kept.append(ring[j])
                if j == s:
                    break
                j = (j + 1) % size
            cycle = kept + list(reversed(fan_by_end[s]))[1:] + fan_by_end[t][1:]
            break

    if not _is_valid_cycle(graph, cycle, wanted):
        raise InternalError(f"constructed sequence {cycle} is not a cycle through {list(wanted)}")
    return cycle
