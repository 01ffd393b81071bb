"""Eulerian certificates: closed spanning walks and trails as edge multiplicities.

A closed walk that uses each edge at most twice is the same thing as an
Eulerian multigraph on V(G) whose edges come from G with multiplicity at most
two. A vertex of multiplicity-degree d is met d/2 times, so a k-walk is a
certificate of maximum degree at most 2k.
"""

from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Dict, List, Mapping, Sequence, Tuple

import networkx as nx

from .errors import PreconditionError
from .graph import Edge, MultiGraph, normalize_edge

WALK = "walk"
TRAIL = "trail"
KINDS = (WALK, TRAIL)


@dataclass(frozen=True)
class EulerianCertificate:
    """Edge multiplicities of a closed spanning walk or trail of `host`.

    Attributes:
        host: The graph the walk lives in
        mult: Sorted (u, v, m) triples with m >= 1; absent pairs are unused
        kind: 'walk' or 'trail'
    """

    host: MultiGraph
    mult: Tuple[Tuple[int, int, int], ...] = field(default=())
    kind: str = WALK

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise PreconditionError(f"unknown certificate kind '{self.kind}'")
        merged: Dict[Edge, int] = {}
        for u, v, m in self.mult:
            if m:
                key = normalize_edge((u, v))
                merged[key] = merged.get(key, 0) + int(m)
        object.__setattr__(self, "mult", tuple((u, v, m) for (u, v), m in sorted(merged.items())))

    @classmethod
    def from_mapping(
        cls, host: MultiGraph, mult: Mapping[Edge, int], kind: str = WALK
    ) -> "EulerianCertificate":
        return cls(host, tuple((u, v, m) for (u, v), m in mult.items()), kind)

    @cached_property
    def degrees(self) -> Tuple[int, ...]:
        """Multiplicity-degree of every vertex."""
        deg = [0] * self.host.n
        for u, v, m in self.mult:
            deg[u] += m
            deg[v] += m
        return tuple(deg)

    @property
    def visits(self) -> Tuple[int, ...]:
        """How often the closed traversal meets each vertex.

        A one-vertex host is met once by the trivial walk.
        """
        if self.host.n == 1:
            return (1,)
        return tuple(d // 2 for d in self.degrees)

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    @property
    def max_visits(self) -> int:
        return max(self.visits, default=0)

    def multiplicity(self, u: int, v: int) -> int:
        key = normalize_edge((u, v))
        for a, b, m in self.mult:
            if (a, b) == key:
                return m
        return 0

    def as_dict(self) -> Dict[Edge, int]:
        return {(u, v): m for u, v, m in self.mult}

    def rehost(self, host: MultiGraph) -> "EulerianCertificate":
        """The same multiplicities read as a certificate of another graph on V."""
        return EulerianCertificate(host, self.mult, self.kind)

    def to_json(self) -> Dict[str, Any]:
        return {
            "kind": self.kind,
            "mult": [[u, v, m] for u, v, m in self.mult],
            "visits": list(self.visits),
        }


def validate_certificate(cert: EulerianCertificate) -> List[str]:
    """Re-check every certificate invariant from scratch.

    Returns:
        Problems found; an empty list means the certificate is valid
    """
    host = cert.host
    problems: List[str] = []
    for u, v, m in cert.mult:
        available = host.multiplicity(u, v)
        if not available:
            problems.append(f"edge {u}-{v} is not in the host graph")
            continue
        limit = available if cert.kind == TRAIL else 2
        if not 1 <= m <= limit:
            problems.append(f"edge {u}-{v} has multiplicity {m}, limit {limit} for a {cert.kind}")

    if host.n == 1:
        return problems
    if host.n == 0:
        problems.append("the empty graph has no spanning closed walk")
        return problems

    for v, d in enumerate(cert.degrees):
        if d == 0:
            problems.append(f"vertex {v} is not covered")
        elif d % 2:
            problems.append(f"vertex {v} has odd degree {d}")

    support = nx.Graph()
    support.add_nodes_from(host.vertices)
    support.add_edges_from((u, v) for u, v, _ in cert.mult)
    if not nx.is_connected(support):
        problems.append("support is not connected")
    return problems


def is_valid_certificate(cert: EulerianCertificate) -> bool:
    return not validate_certificate(cert)


def certificate_to_traversal(cert: EulerianCertificate) -> List[int]:
    """Closed vertex sequence using every edge copy of the certificate once.

    The sequence starts and ends at vertex 0; v occurs visits(v) times when
    the closing repetition of the start is not counted.
    """
    if cert.host.n == 1:
        return [0]
    multi = nx.MultiGraph()
    multi.add_nodes_from(cert.host.vertices)
    for u, v, m in cert.mult:
        for _ in range(m):
            multi.add_edge(u, v)
    sequence = [0]
    sequence.extend(v for _, v in nx.eulerian_circuit(multi, source=0))
    return sequence


def certificate_from_traversal(
    host: MultiGraph, sequence: Sequence[int], kind: str = WALK
) -> EulerianCertificate:
    """Count the edge uses of a closed vertex sequence."""
    if host.n == 1 and set(sequence) == {0}:
        return EulerianCertificate(host, (), kind)
    if len(sequence) < 2 or sequence[0] != sequence[-1]:
        raise PreconditionError("traversal must be a closed vertex sequence")
    counts: Dict[Edge, int] = {}
    for a, b in zip(sequence, sequence[1:]):
        key = normalize_edge((a, b))
        counts[key] = counts.get(key, 0) + 1
    return EulerianCertificate.from_mapping(host, counts, kind)


def respects_caps(cert: EulerianCertificate, caps: Mapping[int, int]) -> bool:
    """True if every capped vertex is met at most caps[v] times."""
    visits = cert.visits
    return all(visits[v] <= cap for v, cap in caps.items())
