"""Lifting walk certificates from a contraction back to the original graph.

A certificate of G/A (A an edge or a path) is first read on G: every used
edge of the contraction is given back to one of its preimages, always the
one whose end inside A currently has the smallest lifted degree. The lifted
multigraph H then only needs edges inside A (and, for heavy paths, an
attachment to neighbours of the path ends) to become Eulerian and connected.
"""

from typing import Dict, List, Sequence

import networkx as nx

from .certificates import WALK, EulerianCertificate, validate_certificate
from .errors import LiftError, PreconditionError
from .graph import (
    Edge,
    MultiGraph,
    contract_edge,
    contract_vertex_set,
    contraction_map,
    normalize_edge,
)
from .logger import logger

PAIR_LIMIT = 2


class _LiftedWalk:
    """A certificate of G/A being read back on G."""

    def __init__(self, graph: MultiGraph, block: Sequence[int]) -> None:
        self.graph = graph
        self.block = list(block)
        self.mapping = contraction_map(graph.n, [self.block])
        self.mult: Dict[Edge, int] = {}
        self.deg = [0] * graph.n

    def add(self, u: int, v: int, m: int) -> None:
        key = normalize_edge((u, v))
        total = self.mult.get(key, 0) + m
        if total > PAIR_LIMIT:
            raise LiftError(f"edge {key[0]}-{key[1]} would be used {total} times", key)
        self.mult[key] = total
        self.deg[u] += m
        self.deg[v] += m

    def distribute(self, cert: EulerianCertificate) -> None:
        """Give every unit of the contracted multiplicities to a preimage edge."""
        preimages: Dict[Edge, List[Edge]] = {}
        for u, v in self.graph.pairs:
            a, b = self.mapping[u], self.mapping[v]
            if a != b:
                preimages.setdefault(normalize_edge((a, b)), []).append((u, v))

        inside = set(self.block)
        for a, b, m in cert.mult:
            options = preimages.get((a, b))
            if not options:
                raise PreconditionError(f"certificate edge {a}-{b} is not an edge of the contraction")
            for _ in range(m):
                usable = [e for e in options if self.mult.get(e, 0) < PAIR_LIMIT]
                if not usable:
                    raise LiftError(f"no preimage of {a}-{b} has spare multiplicity", (a, b))
                choice = min(usable, key=lambda e: self._inner_load(e, inside))
                self.add(choice[0], choice[1], 1)

    def _inner_load(self, edge: Edge, inside: set) -> tuple:
        end = edge[0] if edge[0] in inside else edge[1]
        return (self.deg[end], end, edge)

    def connected(self) -> bool:
        """True if the used edges connect every vertex of G."""
        support = nx.Graph()
        support.add_nodes_from(self.graph.vertices)
        support.add_edges_from(self.mult)
        return nx.is_connected(support)

    def certificate(self) -> EulerianCertificate:
        cert = EulerianCertificate.from_mapping(self.graph, self.mult, WALK)
        problems = validate_certificate(cert)
        if problems:
            raise LiftError(f"lifted walk is invalid: {problems[0]}")
        return cert


def lift_walk_over_edge(
    graph: MultiGraph, yz: Sequence[int], cert: EulerianCertificate
) -> EulerianCertificate:
    """Turn a walk certificate of G/yz into one of G.

    After the edges are read back, y and z have degrees of equal parity. If
    either is uncovered or both are even, two copies of yz are added;
    otherwise one copy.

    Raises:
        EdgeNotFoundError: If yz is not an edge of G
        LiftError: If an edge would be used more than twice
    """
    y, z = normalize_edge(yz)
    contracted = contract_edge(graph, (y, z))
    if cert.host.n != contracted.n:
        raise PreconditionError("certificate does not belong to the contracted graph")

    lifted = _LiftedWalk(graph, (y, z))
    lifted.distribute(cert)
    dy, dz = lifted.deg[y], lifted.deg[z]
    if dy and dz and dy % 2 and dz % 2:
        lifted.add(y, z, 1)
    else:
        lifted.add(y, z, 2)
    return lifted.certificate()


def _parity_sweep(lifted: _LiftedWalk, path: Sequence[int]) -> None:
    """Give every path edge 1 or 2 copies so all but the last vertex are even.

    The last vertex is then even as well, since the degree total is even.
    """
    for a, b in zip(path, path[1:]):
        lifted.add(a, b, 1 if lifted.deg[a] % 2 else 2)


def _closest_outside(lifted: _LiftedWalk, end: int, path: Sequence[int]) -> int:
    members = set(path)
    outside = [w for w in lifted.graph.neighbors(end) if w not in members]
    if not outside:
        raise PreconditionError(f"path end {end} has no neighbour outside the path")
    return min(outside, key=lambda w: (lifted.deg[w], w))


def _attach_segment(lifted: _LiftedWalk, anchor: int, segment: Sequence[int], hub: int) -> Edge:
    """Double anchor-segment[0], sweep along the segment, then close at the hub.

    The closing segment-hub edge gets 0 or 1 copies, whichever leaves the
    last segment vertex even.

    Returns:
        The closing edge
    """
    lifted.add(anchor, segment[0], 2)
    _parity_sweep(lifted, segment)
    last = segment[-1]
    if lifted.deg[last] % 2:
        lifted.add(last, hub, 1)
    return (last, hub)


def lift_walk_over_path(
    graph: MultiGraph, path: Sequence[int], cert: EulerianCertificate, k: int
) -> EulerianCertificate:
    """Turn a k-walk certificate of G/P into a k-walk certificate of G.

    With x_j the path vertex of largest lifted degree: if that degree is at
    most 2k - 3, the path is walked once or twice per edge by a parity sweep
    from x_0. Otherwise x_j is left nearly untouched and the two sides of the
    path are hung from outside neighbours y_1 of x_0 and y_2 of x_l.

    Args:
        graph: Original graph G
        path: Vertex sequence x_0 .. x_l of an induced path of G
        cert: Walk certificate of G/P with maximum degree at most 2k
        k: Visit bound

    Raises:
        PreconditionError: If P is not a path of G or an end has no outside neighbour
        LiftError: If some vertex would be met more than k times
    """
    xs = [int(x) for x in path]
    if len(xs) < 2 or len(set(xs)) != len(xs):
        raise PreconditionError("lifting needs a path with at least two distinct vertices")
    for a, b in zip(xs, xs[1:]):
        if not graph.has_edge(a, b):
            raise PreconditionError(f"{a}-{b} is not an edge, so {xs} is not a path")
    if len(xs) == 2:
        return lift_walk_over_edge(graph, xs, cert)

    contracted = contract_vertex_set(graph, xs)
    if cert.host.n != contracted.n:
        raise PreconditionError("certificate does not belong to the contracted graph")

    lifted = _LiftedWalk(graph, xs)
    lifted.distribute(cert)
    j = max(range(len(xs)), key=lambda i: (lifted.deg[xs[i]], -i))
    heavy = lifted.deg[xs[j]]

    if heavy <= 2 * k - 3:
        _parity_sweep(lifted, xs)
    else:
        logger.debug(f"path lift: x_{j}={xs[j]} has degree {heavy}, hanging the path sides")
        closing: List[Edge] = []
        if j > 0:
            y1 = _closest_outside(lifted, xs[0], xs)
            closing.append(_attach_segment(lifted, y1, xs[:j], xs[j]))
        if j < len(xs) - 1:
            y2 = _closest_outside(lifted, xs[-1], xs)
            closing.append(_attach_segment(lifted, y2, list(reversed(xs[j + 1:])), xs[j]))
        for last, hub in closing:
            key = normalize_edge((last, hub))
            if not lifted.connected() and not lifted.mult.get(key) and lifted.deg[hub] + 2 <= 2 * k:
                lifted.add(last, hub, 2)

    for v, d in enumerate(lifted.deg):
        if d > 2 * k:
            raise LiftError(f"vertex {v} would be met {d // 2} times, more than k={k}", (v,))
    return lifted.certificate()
