"""Toughness-type hypotheses for bounded walks and trails, and cut walks.

Both checks sweep every vertex subset S of their range and compare a
component count of G \\ S against a linear bound in |S|, in exact rational
arithmetic. The subset with the largest excess is reported.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple

from .certificates import WALK, EulerianCertificate, respects_caps, validate_certificate
from .connectivity import cycle_through
from .constants import TRAIL_HYPOTHESIS_MAX_N, WALK_HYPOTHESIS_MAX_N
from .deadline import check_deadline
from .errors import (
    AttachmentError,
    GraphTooLargeError,
    InternalError,
    PreconditionError,
    UnsupportedParameterError,
)
from .graph import (
    Edge,
    MultiGraph,
    VertexSet,
    as_vertex_set,
    components,
    count_components,
    delete_vertices,
    edges_within,
    is_independent,
    normalize_edge,
)
from .tree_packing import format_fraction, omega_value
from .walk_search import find_bounded_walk

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class HypothesisReport:
    """Outcome of a subset sweep.

    Attributes:
        lemma: 'walk' or 'trail'
        k: Visit bound tested
        worst: Subset with the largest left - right
        left: Component measure at the worst subset
        right: Bound at the worst subset
        satisfied: True if every subset passes (directly or by fallback walk)
        fallback: Walk meeting the worst subset at most k times, if one was needed
        subsets: Number of subsets examined
    """

    lemma: str
    k: int
    worst: VertexSet
    left: Fraction
    right: Fraction
    satisfied: bool
    fallback: Optional[EulerianCertificate] = None
    subsets: int = 0

    @property
    def slack(self) -> Fraction:
        return self.right - self.left

    def to_dict(self) -> Dict[str, Any]:
        return {
            "lemma": self.lemma,
            "k": self.k,
            "worst": list(self.worst),
            "left": format_fraction(self.left),
            "right": format_fraction(self.right),
            "satisfied": self.satisfied,
            "fallback": self.fallback.to_json() if self.fallback is not None else None,
            "subsets": self.subsets,
        }


def _subsets(pool: Sequence[int]) -> Iterator[Tuple[int, ...]]:
    """All subsets by increasing size, each size in lexicographic order."""
    for size in range(len(pool) + 1):
        yield from combinations(pool, size)


def walk_bound_value(graph: MultiGraph, subset: Sequence[int], k: int) -> Tuple[Fraction, Fraction]:
    """(omega(G \\ S), (k - 1/2)|S| + 1)."""
    left = Fraction(count_components(graph, subset))
    right = (k - HALF) * len(subset) + 1
    return left, right


def trail_bound_value(graph: MultiGraph, subset: Sequence[int], k: int) -> Tuple[Fraction, Fraction]:
    """(Omega(G \\ S), (k - 1/2)|S| + 1 - e_G(S)/2)."""
    left = omega_value(delete_vertices(graph, subset))
    right = (k - HALF) * len(subset) + 1 - HALF * edges_within(graph, subset)
    return left, right


def check_walk_hypothesis(
    graph: MultiGraph, x: Sequence[int], k: int, use_fallback: bool = False
) -> HypothesisReport:
    """Check omega(G \\ S) <= (k - 1/2)|S| + 1 for every S within X.

    With use_fallback, a subset that breaks the inequality still passes when
    G has a closed spanning walk meeting each vertex of S at most k times.

    Raises:
        GraphTooLargeError: If n exceeds WALK_HYPOTHESIS_MAX_N
        PreconditionError: If X is not independent
    """
    if graph.n > WALK_HYPOTHESIS_MAX_N:
        raise GraphTooLargeError("walk hypothesis sweeps every subset of X", graph.n, WALK_HYPOTHESIS_MAX_N)
    pool = as_vertex_set(x, graph.n)
    if not is_independent(graph, pool):
        raise PreconditionError(f"X = {list(pool)} is not independent")

    worst: Optional[Tuple[Fraction, VertexSet, Fraction, Fraction]] = None
    violated: List[VertexSet] = []
    count = 0
    for subset in _subsets(pool):
        check_deadline()
        count += 1
        left, right = walk_bound_value(graph, subset, k)
        if left > right:
            violated.append(subset)
        if worst is None or left - right > worst[0]:
            worst = (left - right, subset, left, right)
    assert worst is not None

    satisfied = not violated
    fallback: Optional[EulerianCertificate] = None
    if violated and use_fallback:
        satisfied = True
        walks: List[EulerianCertificate] = []
        for subset in violated:
            caps = {v: k for v in subset}
            cert = next((w for w in walks if respects_caps(w, caps)), None)
            if cert is None:
                cert = find_bounded_walk(graph, caps, WALK)
                if cert is None:
                    satisfied = False
                    break
                walks.append(cert)
            if subset == worst[1]:
                fallback = cert
        if satisfied and fallback is None:
            fallback = find_bounded_walk(graph, {v: k for v in worst[1]}, WALK)

    return HypothesisReport("walk", k, worst[1], worst[2], worst[3], satisfied, fallback, count)


def check_trail_hypothesis(graph: MultiGraph, k: int) -> HypothesisReport:
    """Check Omega(G \\ S) <= (k - 1/2)|S| + 1 - e_G(S)/2 for every S within V.

    Raises:
        GraphTooLargeError: If n exceeds TRAIL_HYPOTHESIS_MAX_N
    """
    if graph.n > TRAIL_HYPOTHESIS_MAX_N:
        raise GraphTooLargeError("trail hypothesis sweeps every vertex subset", graph.n, TRAIL_HYPOTHESIS_MAX_N)

    worst: Optional[Tuple[Fraction, VertexSet, Fraction, Fraction]] = None
    satisfied = True
    count = 0
    for subset in _subsets(list(graph.vertices)):
        check_deadline()
        count += 1
        left, right = trail_bound_value(graph, subset, k)
        if left > right:
            satisfied = False
        if worst is None or left - right > worst[0]:
            worst = (left - right, subset, left, right)
    assert worst is not None
    return HypothesisReport("trail", k, worst[1], worst[2], worst[3], satisfied, None, count)


def _double_tree(
    graph: MultiGraph, roots: Sequence[int], members: set, mult: Dict[Edge, int]
) -> set:
    """Double the edges of a BFS forest of G[members] grown from the roots.

    Returns:
        The vertices reached
    """
    simple = graph.to_networkx().subgraph(members)
    reached = set(roots)
    frontier = list(roots)
    while frontier:
        nxt = []
        for v in frontier:
            for w in sorted(simple.neighbors(v)):
                if w not in reached:
                    reached.add(w)
                    key = normalize_edge((v, w))
                    mult[key] = mult.get(key, 0) + 2
                    nxt.append(w)
        frontier = nxt
    return reached


def construct_cut_walk(graph: MultiGraph, cut: Sequence[int], k: int) -> EulerianCertificate:
    """Closed spanning walk meeting each vertex of a 3-vertex cut at most k times.

    A cycle through the three cut vertices is taken first; the components it
    meets are covered by doubled trees hanging off the cycle. Every other
    component is joined by a doubled edge to the least loaded cut vertex and
    covered by its doubled spanning tree.

    Raises:
        UnsupportedParameterError: If |S| != 3
        PreconditionError: If S is not independent or a component sees fewer than 3 cut vertices
        AttachmentError: If a cut vertex would be met more than k times
    """
    s = as_vertex_set(cut, graph.n)
    if len(s) != 3:
        raise UnsupportedParameterError("cut walks are built for cuts of exactly three vertices")
    if not is_independent(graph, s):
        raise PreconditionError(f"cut {list(s)} is not independent")

    parts = components(graph, s)
    for part in parts:
        seen = {w for v in part for w in graph.neighbors(v) if w in s}
        if len(seen) < 3:
            raise PreconditionError(f"component {list(part)} has only {len(seen)} neighbours in the cut")

    cycle = cycle_through(graph, s)
    mult: Dict[Edge, int] = {}
    for a, b in zip(cycle, cycle[1:]):
        key = normalize_edge((a, b))
        mult[key] = mult.get(key, 0) + 1
    on_cycle = set(cycle)

    load = {v: 2 for v in s}
    for part in parts:
        members = set(part)
        roots = sorted(members & on_cycle)
        if roots:
            _double_tree(graph, roots, members, mult)
            continue
        hub = min(s, key=lambda v: (load[v], v))
        entry = min(w for w in graph.neighbors(hub) if w in members)
        key = normalize_edge((hub, entry))
        mult[key] = mult.get(key, 0) + 2
        load[hub] += 2
        _double_tree(graph, [entry], members, mult)

    if any(d > 2 * k for d in load.values()):
        raise AttachmentError(f"cut vertices would be met more than k={k} times", dict(load))

    cert = EulerianCertificate.from_mapping(graph, mult, WALK)
    problems = validate_certificate(cert)
    if problems:
        raise InternalError(f"cut walk is invalid: {problems[0]}")
    return cert
