"""Constructive reduction of a 3-connected graph to a walk or a bipartite minor.

The graph is made minimally 3-connected by deleting edges, then contracted
while an edge joins two vertices of degree 3..k (contract a contractible edge
there) or two vertices of degree at least 4 (contract a maximal path of such
vertices). When neither happens, the reduced graph is handed to the walk
oracle. A walk found there is lifted back through every step; if a lift
fails, the oracle is asked again at that level.
"""

from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple, Union

from .certificates import WALK, EulerianCertificate
from .connectivity import is_contractible_edge, is_k_connected
from .errors import InternalError, LiftError, PreconditionError, UnsupportedParameterError
from .graph import (
    Edge,
    MultiGraph,
    VertexSet,
    canonical_hash,
    contract_edge,
    contract_vertex_set,
    delete_edge,
    is_independent,
    normalize_edge,
)
from .lifting import lift_walk_over_edge, lift_walk_over_path
from .logger import logger
from .walk_search import find_bounded_walk

WalkOracle = Callable[[MultiGraph], Optional[EulerianCertificate]]

DELETE_EDGE = "delete-edge"
CONTRACT_EDGE = "contract-edge"
CONTRACT_PATH = "contract-path"


@dataclass(frozen=True)
class TraceStep:
    """One reduction step with the graph hashes before and after it."""

    op: str
    args: Tuple[int, ...]
    before_hash: str
    after_hash: str

    def to_dict(self) -> Dict[str, Any]:
        return {"op": self.op, "args": list(self.args), "before": self.before_hash, "after": self.after_hash}


@dataclass(frozen=True)
class ReductionTrace:
    steps: Tuple[TraceStep, ...] = ()

    def __len__(self) -> int:
        return len(self.steps)

    def to_list(self) -> List[Dict[str, Any]]:
        return [step.to_dict() for step in self.steps]


@dataclass(frozen=True)
class BipartiteWitness:
    """A reduced minor R with sides X (degree >= k+1) and Y (degree 3)."""

    graph: MultiGraph
    x: VertexSet
    y: VertexSet
    trace: ReductionTrace

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.graph.n,
            "edges": [[u, v, m] for u, v, m in self.graph.edges],
            "X": list(self.x),
            "Y": list(self.y),
            "trace": self.trace.to_list(),
        }


@dataclass(frozen=True)
class Reduction:
    """Result of reduce_to_bipartite_witness.

    Attributes:
        outcome: A k-walk certificate of the input, or a bipartite witness
        trace: Every step applied to the input graph
        lifts: Per contraction step, how the walk was carried back ('lift' or 'oracle')
    """

    outcome: Union[EulerianCertificate, BipartiteWitness]
    trace: ReductionTrace
    lifts: Tuple[Tuple[int, str], ...] = field(default=())

    @property
    def certificate(self) -> Optional[EulerianCertificate]:
        return self.outcome if isinstance(self.outcome, EulerianCertificate) else None

    @property
    def witness(self) -> Optional[BipartiteWitness]:
        return self.outcome if isinstance(self.outcome, BipartiteWitness) else None


def _apply(graph: MultiGraph, op: str, args: Sequence[int]) -> MultiGraph:
    if op == DELETE_EDGE:
        return delete_edge(graph, args)
    if op == CONTRACT_EDGE:
        return contract_edge(graph, args)
    if op == CONTRACT_PATH:
        return contract_vertex_set(graph, args)
    raise PreconditionError(f"unknown trace operation '{op}'")


def replay_trace(graph: MultiGraph, trace: ReductionTrace) -> MultiGraph:
    """Apply every recorded step to G and return the final graph.

    Raises:
        PreconditionError: If a recorded hash does not match the replayed graph
    """
    current = graph
    for index, step in enumerate(trace.steps):
        if canonical_hash(current) != step.before_hash:
            raise PreconditionError(f"step {index} ({step.op}) does not start from the recorded graph")
        current = _apply(current, step.op, step.args)
        if canonical_hash(current) != step.after_hash:
            raise PreconditionError(f"step {index} ({step.op}) does not reproduce the recorded graph")
    return current


def low_degree_edge(graph: MultiGraph, k: int) -> Optional[Edge]:
    """First edge whose ends both have degree between 3 and k."""
    for u, v in graph.pairs:
        if 3 <= graph.degree(u) <= k and 3 <= graph.degree(v) <= k:
            return (u, v)
    return None


def high_degree_edge(graph: MultiGraph) -> Optional[Edge]:
    """First edge whose ends both have degree at least 4."""
    for u, v in graph.pairs:
        if graph.degree(u) >= 4 and graph.degree(v) >= 4:
            return (u, v)
    return None


def maximal_high_degree_path(graph: MultiGraph, edge: Sequence[int]) -> List[int]:
    """Grow an edge into a maximal induced path of vertices of degree >= 4.

    Each end is extended by its smallest eligible neighbour as long as the
    path stays induced.
    """
    path = list(normalize_edge(edge))
    high = {v for v in graph.vertices if graph.degree(v) >= 4}

    def extension(end: int, other_members: set) -> Optional[int]:
        for w in graph.neighbors(end):
            if w in high and w not in path and not any(graph.has_edge(w, x) for x in other_members):
                return w
        return None

    for front in (False, True):
        while True:
            end = path[0] if front else path[-1]
            w = extension(end, set(path) - {end})
            if w is None:
                break
            if front:
                path.insert(0, w)
            else:
                path.append(w)
    return path


class _Reducer:
    """Single descent from the input graph, then lifting back up."""

    def __init__(self, graph: MultiGraph, k: int, oracle: WalkOracle) -> None:
        self.k = k
        self.oracle = oracle
        self.current = graph
        self.steps: List[TraceStep] = []
        self.levels: List[Tuple[MultiGraph, str, Tuple[int, ...]]] = []

    def _record(self, op: str, args: Sequence[int]) -> None:
        before = self.current
        after = _apply(before, op, args)
        self.steps.append(TraceStep(op, tuple(args), canonical_hash(before), canonical_hash(after)))
        self.levels.append((before, op, tuple(args)))
        self.current = after

    def minimalize(self) -> None:
        """Delete edges while 3-connectivity survives; parallel copies go first."""
        while True:
            graph = self.current
            parallel = [(u, v) for u, v, m in graph.edges if m > 1]
            if parallel:
                self._record(DELETE_EDGE, parallel[0])
                continue
            removable = next(
                (e for e in graph.pairs if is_k_connected(delete_edge(graph, e), 3)), None
            )
            if removable is None:
                return
            self._record(DELETE_EDGE, removable)

    def _contractible_at(self, edge: Edge) -> Optional[Edge]:
        graph = self.current
        if is_contractible_edge(graph, edge):
            return edge
        for end in edge:
            for w in graph.neighbors(end):
                candidate = normalize_edge((end, w))
                if candidate != edge and is_contractible_edge(graph, candidate):
                    return candidate
        return None

    def contract_once(self) -> bool:
        """Apply one contraction, or return False when both degree claims hold."""
        graph = self.current
        if graph.n <= 4:
            return False

        low = low_degree_edge(graph, self.k)
        if low is not None:
            target = self._contractible_at(low)
            if target is not None:
                self._record(CONTRACT_EDGE, target)
                return True
            logger.warning(f"no contractible edge at {low} in {graph}; stopping the descent")
            return False

        high = high_degree_edge(graph)
        if high is not None:
            path = maximal_high_degree_path(graph, high)
            if len(path) > 2 and is_k_connected(contract_vertex_set(graph, path), 3):
                self._record(CONTRACT_PATH, path)
                return True
            if is_contractible_edge(graph, high):
                self._record(CONTRACT_EDGE, high)
                return True
            logger.warning(f"edge {high} of {graph} is not contractible; stopping the descent")
        return False

    def descend(self) -> None:
        while True:
            self.minimalize()
            if not self.contract_once():
                return

    def within_bound(self, cert: Optional[EulerianCertificate]) -> Optional[EulerianCertificate]:
        if cert is None or cert.max_visits > self.k:
            return None
        return cert

    def lift(self, cert: EulerianCertificate) -> Tuple[EulerianCertificate, List[Tuple[int, str]]]:
        log: List[Tuple[int, str]] = []
        for index in range(len(self.levels) - 1, -1, -1):
            before, op, args = self.levels[index]
            if op == DELETE_EDGE:
                cert = cert.rehost(before)
                continue
            lifted: Optional[EulerianCertificate] = None
            try:
                if op == CONTRACT_EDGE:
                    lifted = lift_walk_over_edge(before, args, cert)
                else:
                    lifted = lift_walk_over_path(before, args, cert, self.k)
            except (LiftError, PreconditionError) as exc:
                logger.debug(f"lift of step {index} failed: {exc}")
            lifted = self.within_bound(lifted)
            if lifted is not None:
                log.append((index, "lift"))
            else:
                lifted = self.within_bound(self.oracle(before))
                if lifted is None:
                    raise InternalError(f"no {self.k}-walk at step {index} although the reduced graph has one")
                log.append((index, "oracle"))
            cert = lifted
        log.reverse()
        return cert, log


def reduce_to_bipartite_witness(
    graph: MultiGraph, k: int, oracle: Optional[WalkOracle] = None
) -> Reduction:
    """Find a k-walk of a 3-connected graph through reduction, or a bipartite minor.

    Args:
        graph: 3-connected input graph
        k: Visit bound, at least 3
        oracle: Walk finder for the reduced graphs (default: exact search with cap k)

    Returns:
        Reduction whose outcome is a k-walk certificate of the input, or a
        BipartiteWitness when the fully reduced graph has no k-walk

    Raises:
        UnsupportedParameterError: If k < 3
        PreconditionError: If G is not 3-connected
        InternalError: If the reduced graph has no k-walk but is not a bipartite witness
    """
    if k < 3:
        raise UnsupportedParameterError("the reduction needs k >= 3")
    if not is_k_connected(graph, 3):
        raise PreconditionError("the reduction needs a 3-connected graph")
    walk_oracle: WalkOracle = oracle or (lambda g: find_bounded_walk(g, k, WALK))
    reducer = _Reducer(graph, k, walk_oracle)
    reducer.descend()
    trace = ReductionTrace(tuple(reducer.steps))
    reduced = reducer.current
    logger.debug(f"reduced {graph} to {reduced} in {len(trace)} steps")

    base = reducer.within_bound(walk_oracle(reduced))
    if base is None:
        x = tuple(v for v in reduced.vertices if reduced.degree(v) >= k + 1)
        y = tuple(v for v in reduced.vertices if reduced.degree(v) == 3)
        if len(x) + len(y) != reduced.n or not (is_independent(reduced, x) and is_independent(reduced, y)):
            raise InternalError(f"reduced graph {reduced} has no {k}-walk and is not a bipartite witness")
        logger.warning(f"no {k}-walk in the reduced graph; returning a bipartite witness")
        return Reduction(BipartiteWitness(reduced, x, y, trace), trace)

    cert, log = reducer.lift(base)
    return Reduction(cert.rehost(graph), trace, tuple(log))
