"""Tests for lifting walk certificates from contractions."""

import pytest
from hypothesis import given, settings

from core import (
    EulerianCertificate,
    MultiGraph,
    PreconditionError,
    certificate_from_traversal,
    contract_edge,
    contract_vertex_set,
    find_bounded_walk,
    is_contractible_edge,
    is_valid_certificate,
    lift_walk_over_edge,
    lift_walk_over_path,
)

from .strategies import three_connected_graphs


def test_triangle_walk_lifts_to_four_cycle():
    square = MultiGraph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    triangle = contract_edge(square, (1, 2))
    cert = certificate_from_traversal(triangle, [0, 1, 2, 0])
    lifted = lift_walk_over_edge(square, (1, 2), cert)
    assert lifted.mult == ((0, 1, 1), (0, 3, 1), (1, 2, 1), (2, 3, 1))
    assert lifted.visits == (1, 1, 1, 1)


def test_uncovered_end_gets_a_doubled_edge():
    graph = MultiGraph.from_edges(4, [(0, 1), (1, 2), (1, 3), (2, 3)])
    triangle = contract_edge(graph, (0, 1))
    cert = certificate_from_traversal(triangle, [0, 1, 2, 0])
    lifted = lift_walk_over_edge(graph, (0, 1), cert)
    assert lifted.multiplicity(0, 1) == 2
    assert lifted.visits == (1, 2, 1, 1)
    assert is_valid_certificate(lifted)


def test_path_lift_by_parity_sweep(octahedron):
    path = [0, 1, 5]
    contracted = contract_vertex_set(octahedron, path)
    cert = EulerianCertificate(contracted, ((0, 1, 1), (0, 3, 1), (1, 3, 1), (2, 3, 2)))
    assert is_valid_certificate(cert)
    lifted = lift_walk_over_path(octahedron, path, cert, 3)
    assert is_valid_certificate(lifted)
    assert lifted.max_visits == 2
    assert lifted.multiplicity(0, 1) == 1
    assert lifted.multiplicity(1, 5) == 1


def test_path_lift_with_oracle_walk(octahedron):
    path = [0, 1, 5]
    cert = find_bounded_walk(contract_vertex_set(octahedron, path), 3)
    lifted = lift_walk_over_path(octahedron, path, cert, 3)
    assert is_valid_certificate(lifted)
    assert lifted.max_visits <= 3


def test_two_vertex_path_is_an_edge_lift(octahedron):
    cert = find_bounded_walk(contract_edge(octahedron, (0, 1)))
    assert lift_walk_over_path(octahedron, [0, 1], cert, 3) == lift_walk_over_edge(octahedron, (0, 1), cert)


def test_path_lift_preconditions(octahedron):
    cert = find_bounded_walk(contract_vertex_set(octahedron, [0, 1, 5]), 3)
    with pytest.raises(PreconditionError):
        lift_walk_over_path(octahedron, [0, 5, 1], cert, 3)
    with pytest.raises(PreconditionError):
        lift_walk_over_path(octahedron, [0], cert, 3)
    with pytest.raises(PreconditionError):
        lift_walk_over_path(octahedron, [0, 1, 2], find_bounded_walk(octahedron, 1), 3)


def test_edge_lift_rejects_foreign_certificate(k4):
    with pytest.raises(PreconditionError):
        lift_walk_over_edge(k4, (0, 1), find_bounded_walk(k4, 1))


@pytest.mark.slow
@given(three_connected_graphs(max_n=8))
@settings(max_examples=500, deadline=None)
def test_edge_lift_keeps_outside_visits(graph):
    edge = next((e for e in graph.pairs if is_contractible_edge(graph, e)), graph.pairs[0])
    contracted = contract_edge(graph, edge)
    cert = find_bounded_walk(contracted)
    lifted = lift_walk_over_edge(graph, edge, cert)
    assert is_valid_certificate(lifted)

    y, z = edge
    outside = [v for v in graph.vertices if v not in edge]
    index = {v: (v if v < z else v - 1) for v in outside}
    for v in outside:
        assert lifted.visits[v] == cert.visits[index[v]]
    assert lifted.visits[y] + lifted.visits[z] <= cert.visits[y] + 2
