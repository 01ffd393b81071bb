"""Edge-disjoint spanning trees, m-tree-connected components and Omega.

Forests are grown by matroid-union augmentation: an edge that does not fit
into any forest directly is inserted along a shortest chain of exchanges
between the forests. When no chain exists, every edge labelled by the search
lies on forest paths that connect each other, and the labelled edges of each
forest form a spanning tree of the vertices they touch; that vertex set is
therefore m-tree-connected. Component merging relies on this.
"""

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, FrozenSet, Iterator, List, Optional, Sequence, Set, Tuple

import networkx as nx

from .constants import DEADLINE_CHECK_INTERVAL, NASH_WILLIAMS_MAX_N
from .deadline import check_deadline
from .errors import GraphTooLargeError, PreconditionError
from .graph import Edge, MultiGraph, VertexSet

EdgeInstance = Tuple[int, int, int]  # (u, v, copy index)


@dataclass(frozen=True)
class TreePack:
    """m edge-disjoint spanning trees, each a set of edge instances."""

    m: int
    trees: Tuple[FrozenSet[EdgeInstance], ...]

    def to_dict(self) -> Dict[str, Any]:
        return {"m": self.m, "trees": [sorted(list(e) for e in tree) for tree in self.trees]}


@dataclass(frozen=True)
class TCPartition:
    """The m-tree-connected components of a graph.

    Attributes:
        m: Number of trees per component
        parts: Components as sorted vertex tuples, ordered by smallest vertex
        crossing: Edges (with multiplicity) joining different parts
        omega: |P| - crossing/2, only for m == 2
    """

    m: int
    parts: Tuple[VertexSet, ...]
    crossing: int
    omega: Optional[Fraction]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "m": self.m,
            "parts": [list(p) for p in self.parts],
            "crossing": self.crossing,
            "omega": format_fraction(self.omega) if self.omega is not None else None,
        }


def format_fraction(value: Fraction) -> str:
    """Exact 'p/q' rendering used in every report."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


class _ForestPacker:
    """m edge-disjoint forests on a fixed vertex set."""

    def __init__(self, n: int, m: int, ends: Sequence[Edge]) -> None:
        self.n = n
        self.m = m
        self.ends = list(ends)
        self.owner: List[Optional[int]] = [None] * len(self.ends)
        self.forests: List[Set[int]] = [set() for _ in range(m)]

    def _adjacency(self, i: int) -> Dict[int, List[Tuple[int, int]]]:
        adj: Dict[int, List[Tuple[int, int]]] = {}
        for eid in self.forests[i]:
            u, v = self.ends[eid]
            adj.setdefault(u, []).append((v, eid))
            adj.setdefault(v, []).append((u, eid))
        return adj

    @staticmethod
    def _forest_path(adj: Dict[int, List[Tuple[int, int]]], s: int, t: int) -> Optional[List[int]]:
        """Edge ids of the s-t path in a forest, or None if s and t are apart."""
        parent: Dict[int, Tuple[int, int]] = {s: (s, -1)}
        queue = deque([s])
        while queue:
            x = queue.popleft()
            if x == t:
                break
            for y, eid in adj.get(x, ()):
                if y not in parent:
                    parent[y] = (x, eid)
                    queue.append(y)
        if t not in parent:
            return None
        path = []
        x = t
        while x != s:
            x, eid = parent[x]
            path.append(eid)
        return path

    def _search(
        self, start: int, start_ends: Edge
    ) -> Tuple[Optional[Tuple[int, int]], Dict[int, Optional[Tuple[int, int]]]]:
        """Breadth-first exchange search from one new edge.

        Returns:
            ((edge, forest) that can be inserted freely, or None; labels)
        """
        adjs = [self._adjacency(i) for i in range(self.m)]
        labels: Dict[int, Optional[Tuple[int, int]]] = {start: None}
        queue = deque([start])
        while queue:
            x = queue.popleft()
            u, v = start_ends if x == start else self.ends[x]
            for i in range(self.m):
                if x != start and self.owner[x] == i:
                    continue
                path = self._forest_path(adjs[i], u, v)
                if path is None:
                    return (x, i), labels
                for y in path:
                    if y not in labels:
                        labels[y] = (x, i)
                        queue.append(y)
        return None, labels

    def insert(self, eid: int) -> bool:
        """Add an edge to the packing if the union of forests can absorb it."""
        found, labels = self._search(eid, self.ends[eid])
        if found is None:
            return False
        current, target = found
        while True:
            old = self.owner[current]
            if old is not None:
                self.forests[old].discard(current)
            self.forests[target].add(current)
            self.owner[current] = target
            label = labels[current]
            if label is None:
                return True
            current, target = label

    def spanned_by(self, u: int, v: int) -> Optional[Set[int]]:
        """Labelled edges if a new u-v edge cannot be absorbed, else None."""
        phantom = -1
        found, labels = self._search(phantom, (u, v))
        if found is not None:
            return None
        return {eid for eid in labels if eid != phantom}


def _instances(graph: MultiGraph) -> List[EdgeInstance]:
    return [(u, v, c) for u, v, mult in graph.edges for c in range(mult)]


def find_disjoint_spanning_trees(graph: MultiGraph, m: int) -> Optional[TreePack]:
    """m edge-disjoint spanning trees of G, or None if there are none.

    Raises:
        PreconditionError: If m < 1
    """
    if m < 1:
        raise PreconditionError("m must be at least 1")
    n = graph.n
    if n <= 1:
        return TreePack(m, tuple(frozenset() for _ in range(m)))

    instances = _instances(graph)
    if len(instances) < m * (n - 1):
        return None

    packer = _ForestPacker(n, m, [(u, v) for u, v, _ in instances])
    target = m * (n - 1)
    packed = 0
    for eid in range(len(instances)):
        if packer.insert(eid):
            packed += 1
            if packed == target:
                break
    if packed < target:
        return None
    trees = tuple(frozenset(instances[e] for e in forest) for forest in packer.forests)
    return TreePack(m, trees)


def is_valid_tree_pack(graph: MultiGraph, pack: TreePack) -> bool:
    """Every tree spans G and is acyclic; no edge copy is used twice."""
    used: Set[EdgeInstance] = set()
    for tree in pack.trees:
        if len(tree) != max(graph.n - 1, 0) or tree & used:
            return False
        used |= tree
        components = nx.utils.UnionFind(graph.vertices)
        for u, v, c in tree:
            if c >= graph.multiplicity(u, v) or components[u] == components[v]:
                return False
            components.union(u, v)
    return len(pack.trees) == pack.m


def _set_partitions(n: int) -> Iterator[List[int]]:
    """Every partition of 0..n-1 as a restricted growth string."""
    if n == 0:
        yield []
        return
    assignment = [0] * n
    maxima = [0] * n

    def grow(i: int) -> Iterator[List[int]]:
        if i == n:
            yield assignment
            return
        for block in range(maxima[i - 1] + 2):
            assignment[i] = block
            maxima[i] = max(maxima[i - 1], block)
            yield from grow(i + 1)

    yield from grow(1)


def nash_williams_check(graph: MultiGraph, m: int) -> bool:
    """Partition criterion: every partition Q has >= m(|Q| - 1) crossing edges.

    Raises:
        GraphTooLargeError: If n exceeds NASH_WILLIAMS_MAX_N
    """
    if graph.n > NASH_WILLIAMS_MAX_N:
        raise GraphTooLargeError(
            "partition sweep is exhaustive; use find_disjoint_spanning_trees instead",
            graph.n, NASH_WILLIAMS_MAX_N,
        )
    for count, assignment in enumerate(_set_partitions(graph.n)):
        if count % DEADLINE_CHECK_INTERVAL == 0:
            check_deadline()
        blocks = max(assignment, default=-1) + 1
        crossing = sum(m_uv for u, v, m_uv in graph.edges if assignment[u] != assignment[v])
        if crossing < m * (blocks - 1):
            return False
    return True


def tree_connected_components(graph: MultiGraph, m: int) -> TCPartition:
    """The unique partition of V into maximal m-tree-connected vertex sets.

    Starts from singletons and merges parts while some union of parts induces
    an m-tree-connected subgraph; candidate unions are found on the quotient
    graph by testing whether a new edge parallel to a quotient edge is spanned
    by the packed forests.
    """
    if m < 1:
        raise PreconditionError("m must be at least 1")
    instances = _instances(graph)
    parts: List[Set[int]] = [{v} for v in range(graph.n)]

    while True:
        check_deadline()
        index = {v: i for i, part in enumerate(parts) for v in part}
        quotient = [(index[u], index[v]) for u, v, _ in instances if index[u] != index[v]]
        packer = _ForestPacker(len(parts), m, quotient)
        for eid in range(len(quotient)):
            packer.insert(eid)

        group: Optional[Set[int]] = None
        for a, b in sorted({(min(e), max(e)) for e in quotient}):
            labelled = packer.spanned_by(a, b)
            if labelled is not None:
                group = {a, b}
                for eid in labelled:
                    group.update(quotient[eid])
                break
        if group is None:
            break
        merged = set().union(*(parts[i] for i in group))
        parts = [part for i, part in enumerate(parts) if i not in group] + [merged]

    ordered = tuple(sorted(tuple(sorted(part)) for part in parts))
    owner = {v: i for i, part in enumerate(ordered) for v in part}
    crossing = sum(1 for u, v, _ in instances if owner[u] != owner[v])
    omega = Fraction(len(ordered)) - Fraction(crossing, 2) if m == 2 else None
    return TCPartition(m, ordered, crossing, omega)


def omega_value(graph: MultiGraph) -> Fraction:
    """Omega(G) = |P| - e_G(P)/2 over the 2-tree-connected components."""
    omega = tree_connected_components(graph, 2).omega
    assert omega is not None
    return omega
