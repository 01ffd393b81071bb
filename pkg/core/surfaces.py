"""Signed rotation systems, face tracing and Euler-characteristic bounds.

An embedding is stored as a cyclic order of edge ids at every vertex plus a
sign per edge (-1 for an edge whose ends see opposite local orientations).
Faces are traced on flags: every edge has two ends with two sides each, so
edge e owns the flags 4e + 2*end + side. Two involutions act on flags:
crossing the edge (a0, which keeps the side on a negative edge and switches
it on a positive one) and turning at a vertex (a1, which joins side 1 of one
edge end with side 0 of the next end in the rotation). The faces are the
orbits of <a0, a1>.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import partial
from itertools import permutations, product
from typing import Any, Dict, List, Mapping, Optional, Sequence, Set, Tuple, Union

import networkx as nx

from .constants import DEADLINE_CHECK_INTERVAL, GENUS_MAX_DEGREE_SUM
from .deadline import check_deadline, remaining_ms, time_limit
from .errors import GraphTooLargeError, PreconditionError, RotationFormatError
from .graph import (
    Edge,
    MultiGraph,
    VertexSet,
    as_vertex_set,
    components,
    contraction_map,
    delete_vertices,
    edges_within,
    is_connected,
    quotient_graph,
)
from .logger import logger
from .tree_packing import format_fraction, tree_connected_components


def incident_edges(ends: Sequence[Edge], n: int) -> List[List[int]]:
    """Edge ids at every vertex, in id order."""
    incident: List[List[int]] = [[] for _ in range(n)]
    for eid, (u, v) in enumerate(ends):
        incident[u].append(eid)
        incident[v].append(eid)
    return incident


@dataclass(frozen=True)
class SignedRotationSystem:
    """A combinatorial embedding of a multigraph.

    Attributes:
        host: Embedded graph
        ends: Endpoints of every edge id (one id per edge copy)
        rotation: Cyclic order of incident edge ids at every vertex
        signs: +1 or -1 per edge id
    """

    host: MultiGraph
    ends: Tuple[Edge, ...]
    rotation: Tuple[Tuple[int, ...], ...]
    signs: Tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.ends) != sorted(self.host.edge_instances()):
            raise PreconditionError("edge ids do not match the edges of the host graph")
        if len(self.rotation) != self.host.n:
            raise PreconditionError(f"rotation covers {len(self.rotation)} of {self.host.n} vertices")
        if len(self.signs) != len(self.ends) or any(s not in (1, -1) for s in self.signs):
            raise PreconditionError("every edge needs a sign of +1 or -1")
        incident = incident_edges(self.ends, self.host.n)
        for v, order in enumerate(self.rotation):
            if sorted(order) != incident[v]:
                raise PreconditionError(f"rotation at vertex {v} does not list its incident edges once each")

    @property
    def edge_count(self) -> int:
        return len(self.ends)

    def flipped(self, v: int) -> "SignedRotationSystem":
        """Reverse the rotation at v and negate the signs of its edges."""
        rotation = list(self.rotation)
        rotation[v] = tuple(reversed(rotation[v]))
        signs = [(-s if v in self.ends[e] else s) for e, s in enumerate(self.signs)]
        return SignedRotationSystem(self.host, self.ends, tuple(rotation), tuple(signs))


@dataclass(frozen=True)
class EmbeddingReport:
    """Faces of an embedding and the surface they determine.

    Attributes:
        faces: Every face as the cyclic sequence of edge ids along its boundary
        face_count: F
        chi: |V| - |E| + F
        orientable: True if sign flips at vertices can make every sign +1
    """

    faces: Tuple[Tuple[int, ...], ...]
    face_count: int
    chi: int
    orientable: bool

    @property
    def euler_genus(self) -> int:
        return 2 - self.chi

    def to_dict(self) -> Dict[str, Any]:
        return {
            "chi": self.chi,
            "F": self.face_count,
            "orientable": self.orientable,
            "faces": [list(face) for face in self.faces],
        }


def _end_index(ends: Sequence[Edge], eid: int, v: int) -> int:
    return 0 if ends[eid][0] == v else 1


def _trace_faces(
    ends: Sequence[Edge], rotation: Sequence[Sequence[int]], signs: Sequence[int]
) -> List[Tuple[int, ...]]:
    flags = 4 * len(ends)
    cross = [0] * flags
    for eid, sign in enumerate(signs):
        for end in (0, 1):
            for side in (0, 1):
                target_side = 1 - side if sign == 1 else side
                cross[4 * eid + 2 * end + side] = 4 * eid + 2 * (1 - end) + target_side

    turn = [0] * flags
    for v, order in enumerate(rotation):
        d = len(order)
        for j in range(d):
            e, f = order[j], order[(j + 1) % d]
            a = 4 * e + 2 * _end_index(ends, e, v) + 1
            b = 4 * f + 2 * _end_index(ends, f, v)
            turn[a] = b
            turn[b] = a

    seen = [False] * flags
    faces: List[Tuple[int, ...]] = []
    for start in range(flags):
        if seen[start]:
            continue
        boundary: List[int] = []
        flag = start
        while True:
            seen[flag] = True
            seen[cross[flag]] = True
            boundary.append(flag // 4)
            flag = turn[cross[flag]]
            if flag == start:
                break
        faces.append(tuple(boundary))
    return faces


def _is_orientable(n: int, ends: Sequence[Edge], signs: Sequence[int]) -> bool:
    """Signs can be cleared by flips iff positive-subdivided graph is bipartite."""
    aux = nx.Graph()
    aux.add_nodes_from(range(n))
    for eid, ((u, v), sign) in enumerate(zip(ends, signs)):
        if sign == 1:
            middle = ("mid", eid)
            aux.add_edge(u, middle)
            aux.add_edge(middle, v)
        else:
            aux.add_edge(u, v)
    return nx.is_bipartite(aux)


def face_trace(system: SignedRotationSystem) -> EmbeddingReport:
    """Trace the faces of an embedding and compute its Euler characteristic.

    A graph without edges has a single face.

    Raises:
        PreconditionError: If the host graph is not connected
    """
    host = system.host
    if not is_connected(host):
        raise PreconditionError("face tracing needs a connected graph")
    if not system.ends:
        return EmbeddingReport(((),), 1, host.n + 1, True)
    faces = _trace_faces(system.ends, system.rotation, system.signs)
    chi = host.n - len(system.ends) + len(faces)
    orientable = _is_orientable(host.n, system.ends, system.signs)
    return EmbeddingReport(tuple(faces), len(faces), chi, orientable)


def rotation_from_neighbours(
    graph: MultiGraph,
    order: Union[Mapping[int, Sequence[int]], Sequence[Sequence[int]]],
    signs: Optional[Mapping[Edge, int]] = None,
) -> SignedRotationSystem:
    """Build an embedding of a simple graph from cyclic neighbour orders.

    Edge ids follow the canonical edge order of the graph.
    """
    if not graph.is_simple:
        raise PreconditionError("neighbour orders only identify edges in simple graphs")
    ends = tuple(graph.edge_instances())
    index = {e: i for i, e in enumerate(ends)}
    rotation = []
    for v in graph.vertices:
        neighbours = order[v]
        try:
            rotation.append(tuple(index[(min(v, w), max(v, w))] for w in neighbours))
        except KeyError as exc:
            raise PreconditionError(f"vertex {v} is not adjacent to {exc.args[0]}") from None
    sign_list = [1] * len(ends)
    for (u, v), s in (signs or {}).items():
        sign_list[index[(min(u, v), max(u, v))]] = s
    return SignedRotationSystem(graph, ends, tuple(rotation), tuple(sign_list))


def parse_rotation(
    text: str, graph: MultiGraph, ends: Optional[Sequence[Edge]] = None
) -> SignedRotationSystem:
    """Read a rotation file.

    One line 'v: e_1 ... e_d' per vertex lists its edge ids in cyclic order;
    an optional 'signs: e:-1,...' line negates edges. '#' starts a comment.

    Args:
        text: File contents
        graph: Embedded graph
        ends: Endpoints per edge id (default: canonical edge order of the graph)

    Raises:
        RotationFormatError: With the line number of the problem
    """
    edge_ends = tuple(ends) if ends is not None else tuple(graph.edge_instances())
    incident = incident_edges(edge_ends, graph.n)
    rotation: Dict[int, Tuple[int, ...]] = {}
    signs = [1] * len(edge_ends)
    offset = 0
    line_no = 0
    for line_no, raw in enumerate(text.split("\n"), start=1):
        line = raw.split("#", 1)[0].strip()
        line_offset = offset
        offset += len(raw.encode("utf-8")) + 1
        if not line:
            continue
        head, sep, body = line.partition(":")
        if not sep:
            raise RotationFormatError("expected 'v: e_1 ... e_d' or 'signs: ...'", line_no, line_offset)
        head = head.strip()

        if head == "signs":
            for item in filter(None, (part.strip() for part in body.split(","))):
                eid_text, colon, sign_text = item.partition(":")
                try:
                    eid, sign = int(eid_text), int(sign_text)
                except ValueError:
                    raise RotationFormatError(f"bad sign entry '{item}'", line_no, line_offset) from None
                if not colon or sign not in (1, -1) or not 0 <= eid < len(edge_ends):
                    raise RotationFormatError(f"bad sign entry '{item}'", line_no, line_offset)
                signs[eid] = sign
            continue

        try:
            v = int(head)
            order = tuple(int(tok) for tok in body.split())
        except ValueError:
            raise RotationFormatError("vertex and edge ids must be integers", line_no, line_offset) from None
        if not 0 <= v < graph.n:
            raise RotationFormatError(f"vertex {v} out of range for n={graph.n}", line_no, line_offset)
        if v in rotation:
            raise RotationFormatError(f"vertex {v} listed twice", line_no, line_offset)
        if sorted(order) != incident[v]:
            raise RotationFormatError(
                f"vertex {v} must list its edges {incident[v]} exactly once", line_no, line_offset
            )
        rotation[v] = order

    end_line = len(text.splitlines()) + 1
    for v in graph.vertices:
        if v not in rotation:
            if incident[v]:
                raise RotationFormatError(f"no rotation given for vertex {v}", end_line, offset)
            rotation[v] = ()
    try:
        return SignedRotationSystem(
            graph, edge_ends, tuple(rotation[v] for v in graph.vertices), tuple(signs)
        )
    except PreconditionError as exc:
        raise RotationFormatError(str(exc), end_line, offset) from None


def serialize_rotation(system: SignedRotationSystem) -> str:
    """Write the rotation file form of an embedding."""
    lines = [f"{v}: " + " ".join(str(e) for e in order) for v, order in enumerate(system.rotation)]
    negative = [e for e, s in enumerate(system.signs) if s == -1]
    if negative:
        lines.append("signs: " + ",".join(f"{e}:-1" for e in negative))
    return "\n".join(line.rstrip() for line in lines) + "\n"


def edge_bound_check(n: int, m: int, chi: int, triangle_free: bool) -> bool:
    """Euler-formula edge bound: m <= 2n - 2chi (triangle-free) or 3n - 3chi.

    Raises:
        PreconditionError: If n < 3 or chi > 2
    """
    if n < 3 or chi > 2:
        raise PreconditionError("edge bounds need n >= 3 and chi <= 2")
    if triangle_free:
        return m <= 2 * n - 2 * chi
    return m <= 3 * n - 3 * chi


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def walk_bound(chi: int) -> int:
    """Visits that suffice for 3-connected graphs on a surface: ceil((6 - 2chi)/3).

    Raises:
        PreconditionError: If chi > 0
    """
    if chi > 0:
        raise PreconditionError("the walk bound holds for surfaces with chi <= 0")
    return _ceil_div(6 - 2 * chi, 3)


def trail_bound(chi: int) -> int:
    """Visits that suffice for 5-connected graphs on a surface: ceil((6 - 3chi)/4).

    Raises:
        PreconditionError: If chi > 0
    """
    if chi > 0:
        raise PreconditionError("the trail bound holds for surfaces with chi <= 0")
    return _ceil_div(6 - 3 * chi, 4)


def conjecture_lower_bound(chi: int) -> int:
    """ceil((4 - chi)/4), forced by K_{4, 4-chi} for 4-connected graphs."""
    return _ceil_div(4 - chi, 4)


def _spanning_tree_edges(ends: Sequence[Edge], n: int) -> set:
    components = nx.utils.UnionFind(range(n))
    tree = set()
    for eid, (u, v) in enumerate(ends):
        if components[u] != components[v]:
            components.union(u, v)
            tree.add(eid)
    return tree


Best = Tuple[int, Tuple[Tuple[int, ...], ...], Tuple[int, ...]]


def _best_embedding(
    n: int,
    ends: Tuple[Edge, ...],
    free: Sequence[int],
    ceiling: int,
    limit_ms: Optional[int],
    choices: Sequence[Sequence[Tuple[int, ...]]],
) -> Best:
    """First embedding of largest chi over the product of rotation choices."""
    best: Optional[Best] = None
    count = 0
    with time_limit(limit_ms):
        for rotation in product(*choices):
            for flips in product((1, -1), repeat=len(free)):
                count += 1
                if count % DEADLINE_CHECK_INTERVAL == 0:
                    check_deadline()
                signs = [1] * len(ends)
                for e, s in zip(free, flips):
                    signs[e] = s
                chi = n - len(ends) + len(_trace_faces(ends, rotation, signs))
                if best is None or chi > best[0]:
                    best = (chi, tuple(rotation), tuple(signs))
                    if chi >= ceiling:
                        return best
    assert best is not None
    return best


def min_euler_genus_bruteforce(
    graph: MultiGraph, chi_floor: Optional[int] = None, jobs: int = 1
) -> Optional[Tuple[int, SignedRotationSystem]]:
    """Largest Euler characteristic over all embeddings of a small graph.

    Planar graphs are answered by a planar embedding. Otherwise every
    rotation (first edge at each vertex fixed) is combined with every sign
    choice off a spanning tree; the search stops once chi = 1 is reached,
    since a non-planar graph cannot do better.

    With jobs > 1 the rotations are split by the choice at the first vertex
    of degree three or more and searched in worker processes; the answer is
    the same as the single-process search.

    Returns:
        (chi, witness embedding), or None if no embedding reaches chi_floor

    Raises:
        PreconditionError: If G is not connected
        GraphTooLargeError: If the degree sum exceeds GENUS_MAX_DEGREE_SUM
    """
    if not is_connected(graph):
        raise PreconditionError("embeddings are searched for connected graphs only")
    degree_sum = sum(graph.degrees)
    if degree_sum > GENUS_MAX_DEGREE_SUM:
        raise GraphTooLargeError(
            "rotation search is factorial; supply a rotation file instead",
            degree_sum, GENUS_MAX_DEGREE_SUM,
        )

    simple = graph.to_networkx()
    planar, embedding = nx.check_planarity(simple)
    if planar and graph.is_simple and graph.n > 1:
        order = {v: list(embedding.neighbors_cw_order(v)) for v in graph.vertices}
        system = rotation_from_neighbours(graph, order)
        if face_trace(system).chi == 2:
            return 2, system
    ceiling = 2 if planar else 1

    ends = tuple(graph.edge_instances())
    if not ends:
        system = SignedRotationSystem(graph, (), tuple(() for _ in graph.vertices), ())
        return face_trace(system).chi, system
    incident = incident_edges(ends, graph.n)
    choices = [
        [(ids[0],) + rest for rest in permutations(ids[1:])] if ids else [()]
        for ids in incident
    ]
    tree = _spanning_tree_edges(ends, graph.n)
    free = [e for e in range(len(ends)) if e not in tree]

    search = partial(_best_embedding, graph.n, ends, free, ceiling, remaining_ms())
    split = next((i for i, options in enumerate(choices) if len(options) > 1), None)
    if jobs <= 1 or split is None:
        best = search(choices)
    else:
        chunks = [choices[:split] + [[option]] + choices[split + 1:] for option in choices[split]]
        logger.debug(f"genus search: {len(chunks)} rotation chunks on {jobs} workers")
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(search, chunks))
        # Chunks follow the sequential order, so the first maximum is the sequential answer
        best = max(results, key=lambda result: result[0])

    chi, rotation, signs = best
    if chi_floor is not None and chi < chi_floor:
        return None
    return chi, SignedRotationSystem(graph, ends, rotation, signs)


@dataclass(frozen=True)
class BoundCheck:
    """One inequality left <= right of a cut counting argument."""

    name: str
    left: Fraction
    right: Fraction

    @property
    def holds(self) -> bool:
        return self.left <= self.right

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "left": format_fraction(self.left),
            "right": format_fraction(self.right),
            "holds": self.holds,
        }


@dataclass(frozen=True)
class CutBoundReport:
    """The counting chain behind a surface bound, evaluated on one cut."""

    kind: str
    cut: VertexSet
    chi: int
    checks: Tuple[BoundCheck, ...]

    @property
    def holds(self) -> bool:
        return all(check.holds for check in self.checks)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": self.kind,
            "cut": list(self.cut),
            "chi": self.chi,
            "holds": self.holds,
            "checks": [check.to_dict() for check in self.checks],
        }


def _contract_parts(
    graph: MultiGraph, cut: VertexSet, parts: Sequence[Sequence[int]]
) -> Tuple[MultiGraph, Set[int], Set[int]]:
    """Simple graph H with every part contracted, plus the images of the cut and of the parts."""
    contracted = quotient_graph(graph, parts, simplify=True)
    mapping = contraction_map(graph.n, parts)
    return contracted, {mapping[v] for v in cut}, {mapping[part[0]] for part in parts}


def walk_cut_bound(graph: MultiGraph, cut: Sequence[int], chi: int) -> CutBoundReport:
    """Counting chain for bounded walks on a cut S.

    H is the bipartite simple graph between S and the contracted components
    of G \\ S. Checks 3*omega <= |E(H)|, |E(H)| <= 2|V(H)| - 2chi and
    omega <= 2|S| - 2chi.
    """
    s = as_vertex_set(cut, graph.n)
    parts = components(graph, s)
    contracted, s_img, _ = _contract_parts(graph, s, parts)
    e_h = sum(1 for u, v in contracted.pairs if (u in s_img) != (v in s_img))
    omega = len(parts)
    checks = (
        BoundCheck("3*omega <= |E(H)|", Fraction(3 * omega), Fraction(e_h)),
        BoundCheck("|E(H)| <= 2|V(H)| - 2chi", Fraction(e_h), Fraction(2 * (len(s) + omega) - 2 * chi)),
        BoundCheck("omega <= 2|S| - 2chi", Fraction(omega), Fraction(2 * len(s) - 2 * chi)),
    )
    return CutBoundReport("walk", s, chi, checks)


def trail_cut_bound(graph: MultiGraph, cut: Sequence[int], chi: int) -> CutBoundReport:
    """Counting chain for bounded trails on a cut S.

    H is the simple graph obtained by contracting the 2-tree-connected
    components of G \\ S, and S' the contracted vertices. The Euler bound is
    only checked when H has at least 3 vertices, and the degree count only
    when every vertex of S' has degree at least 5 in H.
    """
    s = as_vertex_set(cut, graph.n)
    keep = [v for v in graph.vertices if v not in set(s)]
    rest = delete_vertices(graph, s)
    partition = tree_connected_components(rest, 2)
    parts = [tuple(keep[i] for i in part) for part in partition.parts]
    contracted, s_img, s_prime = _contract_parts(graph, s, parts)

    e_total = len(contracted.pairs)
    e_s = sum(1 for u, v in contracted.pairs if u in s_img and v in s_img)
    e_sp = sum(1 for u, v in contracted.pairs if u in s_prime and v in s_prime)
    checks: List[BoundCheck] = []
    if contracted.n >= 3:
        checks.append(BoundCheck(
            "|E(H)| <= 3|V(H)| - 3chi", Fraction(e_total), Fraction(3 * contracted.n - 3 * chi)
        ))
    if s_prime and all(contracted.degree(v) >= 5 for v in s_prime):
        checks.append(BoundCheck(
            "5|S'| - e_H(S') <= |E(H)| - e_H(S)",
            Fraction(5 * len(s_prime) - e_sp), Fraction(e_total - e_s),
        ))
    omega = partition.omega if partition.omega is not None else Fraction(0)
    right = Fraction(3, 2) * len(s) - Fraction(3, 2) * chi - Fraction(edges_within(graph, s), 2)
    checks.append(BoundCheck("Omega(G-S) <= 3/2|S| - 3/2chi - e_G(S)/2", omega, right))
    return CutBoundReport("trail", s, chi, tuple(checks))
