"""Loopless multigraphs and their structural operations.

Vertices are the integers 0..n-1. Every operation returns a new graph; a
`MultiGraph` is never mutated after construction. Contractions and deletions
renumber the surviving vertices in increasing order and carry a provenance tag
per vertex: the set of input vertices it stands for.
"""

import hashlib
from dataclasses import dataclass
from functools import cached_property
from typing import (
    Dict,
    FrozenSet,
    Iterable,
    List,
    Optional,
    Sequence,
    Tuple,
)

import networkx as nx

from .errors import EdgeNotFoundError, PreconditionError

Edge = Tuple[int, int]
VertexSet = Tuple[int, ...]


def normalize_edge(edge: Sequence[int]) -> Edge:
    """Return the edge as (min, max); loops are rejected."""
    u, v = int(edge[0]), int(edge[1])
    if u == v:
        raise PreconditionError(f"loop at vertex {u} is not allowed")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class MultiGraph:
    """A loopless multigraph on vertices 0..n-1.

    Attributes:
        n: Number of vertices
        edges: Sorted (u, v, multiplicity) triples with u < v
        labels: Optional provenance tag per vertex (None means {v} for v)
    """

    n: int
    edges: Tuple[Tuple[int, int, int], ...] = ()
    labels: Optional[Tuple[FrozenSet[int], ...]] = None

    def __post_init__(self) -> None:
        if self.n < 0:
            raise PreconditionError("vertex count must be non-negative")
        merged: Dict[Edge, int] = {}
        for triple in self.edges:
            u, v = normalize_edge(triple)
            mult = int(triple[2]) if len(triple) > 2 else 1
            if mult < 1:
                raise PreconditionError(f"edge {(u, v)} has multiplicity {mult}")
            if v >= self.n:
                raise PreconditionError(f"edge {(u, v)} is out of range for n={self.n}")
            merged[(u, v)] = merged.get((u, v), 0) + mult
        object.__setattr__(
            self, "edges", tuple((u, v, m) for (u, v), m in sorted(merged.items()))
        )
        if self.labels is not None:
            if len(self.labels) != self.n:
                raise PreconditionError("one label per vertex is required")
            object.__setattr__(self, "labels", tuple(frozenset(t) for t in self.labels))

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[Sequence[int]],
        labels: Optional[Sequence[Iterable[int]]] = None,
    ) -> "MultiGraph":
        """Build a graph from (u, v) pairs or (u, v, mult) triples; repeats add up."""
        triples = [
            (e[0], e[1], e[2] if len(e) > 2 else 1) for e in edges
        ]
        tags = None if labels is None else tuple(frozenset(t) for t in labels)
        return cls(n, tuple(triples), tags)

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "MultiGraph":
        """Convert a networkx (multi)graph; nodes are numbered in iteration order."""
        index = {node: i for i, node in enumerate(graph.nodes())}
        return cls.from_edges(
            len(index), ((index[u], index[v]) for u, v in graph.edges())
        )

    def to_networkx(self, multigraph: bool = False) -> nx.Graph:
        """The graph as networkx; by default the underlying simple graph."""
        result = nx.MultiGraph() if multigraph else nx.Graph()
        result.add_nodes_from(range(self.n))
        for u, v, m in self.edges:
            if multigraph:
                for _ in range(m):
                    result.add_edge(u, v)
            else:
                result.add_edge(u, v)
        return result

    @cached_property
    def adjacency(self) -> Tuple[Dict[int, int], ...]:
        """Per vertex, a mapping neighbour -> multiplicity."""
        adj: List[Dict[int, int]] = [{} for _ in range(self.n)]
        for u, v, m in self.edges:
            adj[u][v] = m
            adj[v][u] = m
        return tuple(adj)

    @cached_property
    def degrees(self) -> Tuple[int, ...]:
        """d_G(v) for every vertex, counting multiplicity."""
        return tuple(sum(nbrs.values()) for nbrs in self.adjacency)

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def pairs(self) -> Tuple[Edge, ...]:
        """Distinct adjacent pairs in canonical order."""
        return tuple((u, v) for u, v, _ in self.edges)

    @property
    def edge_count(self) -> int:
        """|E(G)| with multiplicity."""
        return sum(m for _, _, m in self.edges)

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    @property
    def is_simple(self) -> bool:
        return all(m == 1 for _, _, m in self.edges)

    @property
    def tags(self) -> Tuple[FrozenSet[int], ...]:
        """Provenance tag of every vertex."""
        if self.labels is None:
            return tuple(frozenset((v,)) for v in range(self.n))
        return self.labels

    def degree(self, v: int) -> int:
        return self.degrees[v]

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return tuple(sorted(self.adjacency[v]))

    def multiplicity(self, u: int, v: int) -> int:
        if not (0 <= u < self.n and 0 <= v < self.n):
            return 0
        return self.adjacency[u].get(v, 0)

    def has_edge(self, u: int, v: int) -> bool:
        return self.multiplicity(u, v) > 0

    def edge_instances(self) -> List[Edge]:
        """Every edge copy, parallel copies repeated, in canonical order."""
        return [(u, v) for u, v, m in self.edges for _ in range(m)]

    def simplify(self) -> "MultiGraph":
        """The underlying simple graph (tags kept)."""
        return MultiGraph(self.n, tuple((u, v, 1) for u, v, _ in self.edges), self.labels)

    def __str__(self) -> str:
        return f"MultiGraph(n={self.n}, m={self.edge_count})"


def as_vertex_set(vertices: Iterable[int], n: int) -> VertexSet:
    """Canonical (sorted, duplicate-free) vertex set; members must be in range."""
    result = tuple(sorted(set(int(v) for v in vertices)))
    for v in result:
        if not 0 <= v < n:
            raise PreconditionError(f"vertex {v} is out of range for n={n}")
    return result


def canonical_hash(graph: MultiGraph) -> str:
    """Short stable hash of the vertex count and edge multiset."""
    text = f"{graph.n}:" + ";".join(f"{u},{v},{m}" for u, v, m in graph.edges)
    return hashlib.sha256(text.encode("ascii")).hexdigest()[:16]


def is_connected(graph: MultiGraph) -> bool:
    """True for connected graphs with at least one vertex."""
    return graph.n > 0 and nx.is_connected(graph.to_networkx())


def is_independent(graph: MultiGraph, vertices: Iterable[int]) -> bool:
    """True if no edge joins two vertices of the set."""
    members = set(vertices)
    return all(not (u in members and v in members) for u, v in graph.pairs)


def contraction_map(n: int, blocks: Sequence[Iterable[int]]) -> List[int]:
    """Old-vertex -> new-vertex map of a contraction.

    Every block becomes one vertex; vertices outside all blocks stay single.
    New vertices are numbered by the smallest old vertex they contain.
    """
    owner = list(range(n))
    for block in blocks:
        members = sorted(block)
        for v in members:
            owner[v] = members[0]
    representatives = sorted(set(owner))
    index = {rep: i for i, rep in enumerate(representatives)}
    return [index[owner[v]] for v in range(n)]


def quotient_graph(
    graph: MultiGraph, blocks: Sequence[Iterable[int]], simplify: bool = False
) -> MultiGraph:
    """Contract every block to a single vertex at once.

    Edges inside a block disappear (they would be loops); parallel edges are
    kept as multiplicities unless `simplify` is set. Blocks must be disjoint.
    """
    seen: set = set()
    for block in blocks:
        members = set(block)
        if members & seen:
            raise PreconditionError("contraction blocks must be disjoint")
        seen |= members

    mapping = contraction_map(graph.n, blocks)
    new_n = max(mapping) + 1 if mapping else 0
    tags: List[FrozenSet[int]] = [frozenset() for _ in range(new_n)]
    for v, tag in enumerate(graph.tags):
        tags[mapping[v]] = tags[mapping[v]] | tag

    merged: Dict[Edge, int] = {}
    for u, v, m in graph.edges:
        a, b = mapping[u], mapping[v]
        if a == b:
            continue
        key = (a, b) if a < b else (b, a)
        merged[key] = 1 if simplify else merged.get(key, 0) + m
    return MultiGraph(new_n, tuple((a, b, m) for (a, b), m in merged.items()), tuple(tags))


def _induces_connected(graph: MultiGraph, vertices: Sequence[int]) -> bool:
    return nx.is_connected(graph.to_networkx().subgraph(vertices))


def contract_edge(graph: MultiGraph, edge: Sequence[int]) -> MultiGraph:
    """G/e: merge the endpoints of e, drop the loops, keep parallel edges.

    The merged vertex takes the smaller endpoint's position.
    """
    u, v = normalize_edge(edge)
    if not graph.has_edge(u, v):
        raise EdgeNotFoundError((u, v))
    return quotient_graph(graph, [(u, v)])


def contract_vertex_set(
    graph: MultiGraph, vertices: Iterable[int], simplify: bool = False
) -> MultiGraph:
    """Collapse a connected vertex set into one vertex.

    Args:
        graph: Host graph
        vertices: Non-empty set A with G[A] connected
        simplify: Collapse resulting parallel edges to multiplicity 1

    Raises:
        PreconditionError: If A is empty or G[A] is disconnected
    """
    block = as_vertex_set(vertices, graph.n)
    if not block:
        raise PreconditionError("cannot contract an empty vertex set")
    if not _induces_connected(graph, block):
        raise PreconditionError(f"vertex set {list(block)} does not induce a connected subgraph")
    return quotient_graph(graph, [block], simplify=simplify)


def delete_edge(graph: MultiGraph, edge: Sequence[int]) -> MultiGraph:
    """G - e: remove one copy of e."""
    u, v = normalize_edge(edge)
    if not graph.has_edge(u, v):
        raise EdgeNotFoundError((u, v))
    triples = []
    for a, b, m in graph.edges:
        if (a, b) == (u, v):
            m -= 1
        if m:
            triples.append((a, b, m))
    return MultiGraph(graph.n, tuple(triples), graph.labels)


def delete_vertices(graph: MultiGraph, removed: Iterable[int]) -> MultiGraph:
    """G \\ S: remove the vertices and their edges; survivors keep their tags."""
    gone = set(as_vertex_set(removed, graph.n))
    keep = [v for v in range(graph.n) if v not in gone]
    index = {v: i for i, v in enumerate(keep)}
    triples = tuple(
        (index[u], index[v], m)
        for u, v, m in graph.edges
        if u in index and v in index
    )
    tags = tuple(graph.tags[v] for v in keep)
    return MultiGraph(len(keep), triples, tags)


def induced_subgraph(graph: MultiGraph, vertices: Iterable[int]) -> MultiGraph:
    """G[S], renumbered in increasing order of S."""
    members = set(as_vertex_set(vertices, graph.n))
    return delete_vertices(graph, (v for v in range(graph.n) if v not in members))


def relabel(graph: MultiGraph, permutation: Sequence[int]) -> MultiGraph:
    """Rename vertex v to permutation[v]."""
    if sorted(permutation) != list(range(graph.n)):
        raise PreconditionError("relabelling must be a permutation of the vertices")
    tags: List[FrozenSet[int]] = [frozenset()] * graph.n
    for v, tag in enumerate(graph.tags):
        tags[permutation[v]] = tag
    triples = tuple((permutation[u], permutation[v], m) for u, v, m in graph.edges)
    return MultiGraph(graph.n, triples, tuple(tags))


def count_components(graph: MultiGraph, removed: Iterable[int] = ()) -> int:
    """omega(G \\ removed); the empty graph has 0 components."""
    rest = delete_vertices(graph, removed)
    if rest.n == 0:
        return 0
    return nx.number_connected_components(rest.to_networkx())


def components(graph: MultiGraph, removed: Iterable[int] = ()) -> List[VertexSet]:
    """Vertex sets (in G's numbering) of the components of G \\ removed."""
    gone = set(removed)
    simple = graph.to_networkx()
    simple.remove_nodes_from(gone)
    return sorted(tuple(sorted(c)) for c in nx.connected_components(simple))


def edges_within(graph: MultiGraph, vertices: Iterable[int]) -> int:
    """e_G(S): edges with both ends in S, with multiplicity."""
    members = set(vertices)
    return sum(m for u, v, m in graph.edges if u in members and v in members)
