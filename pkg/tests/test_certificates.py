"""Tests for Eulerian certificates of closed walks and trails."""

import pytest

from core import (
    TRAIL,
    WALK,
    EulerianCertificate,
    MultiGraph,
    PreconditionError,
    certificate_from_traversal,
    certificate_to_traversal,
    is_valid_certificate,
    respects_caps,
    validate_certificate,
)


def square() -> MultiGraph:
    return MultiGraph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])


def test_hamilton_cycle_certificate():
    cert = certificate_from_traversal(square(), [0, 1, 2, 3, 0])
    assert is_valid_certificate(cert)
    assert cert.visits == (1, 1, 1, 1)
    assert cert.to_json() == {
        "kind": "walk",
        "mult": [[0, 1, 1], [0, 3, 1], [1, 2, 1], [2, 3, 1]],
        "visits": [1, 1, 1, 1],
    }


def test_doubled_path_is_a_walk_but_not_a_trail():
    path = MultiGraph.from_edges(3, [(0, 1), (1, 2)])
    walk = certificate_from_traversal(path, [0, 1, 2, 1, 0])
    assert is_valid_certificate(walk)
    assert walk.visits == (1, 2, 1)
    bad = EulerianCertificate(path, walk.mult, TRAIL)
    assert validate_certificate(bad) == [
        "edge 0-1 has multiplicity 2, limit 1 for a trail",
        "edge 1-2 has multiplicity 2, limit 1 for a trail",
    ]


def test_trail_may_use_every_parallel_copy():
    host = MultiGraph.from_edges(3, [(0, 1, 4), (1, 2), (0, 2)])
    assert is_valid_certificate(EulerianCertificate(host, ((0, 1, 1), (1, 2, 1), (0, 2, 1)), TRAIL))
    assert is_valid_certificate(EulerianCertificate(host, ((0, 1, 3), (1, 2, 1), (0, 2, 1)), TRAIL))
    assert "edge 0-1 has multiplicity 5, limit 4 for a trail" in validate_certificate(
        EulerianCertificate(host, ((0, 1, 5),), TRAIL)
    )
    assert "edge 0-1 has multiplicity 3, limit 2 for a walk" in validate_certificate(
        EulerianCertificate(host, ((0, 1, 3), (1, 2, 1), (0, 2, 1)), WALK)
    )


def test_validation_reports_each_problem():
    host = square()
    assert "vertex 3 is not covered" in validate_certificate(
        EulerianCertificate(host, ((0, 1, 2), (1, 2, 2)))
    )
    assert "vertex 0 has odd degree 1" in validate_certificate(
        EulerianCertificate(host, ((0, 1, 1), (1, 2, 1), (2, 3, 1)))
    )
    assert "edge 0-2 is not in the host graph" in validate_certificate(
        EulerianCertificate(host, ((0, 2, 2),))
    )
    two_triangles = MultiGraph.from_edges(
        6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)]
    )
    cert = EulerianCertificate(two_triangles, ((0, 1, 1), (1, 2, 1), (0, 2, 1), (3, 4, 1), (4, 5, 1), (3, 5, 1)))
    assert validate_certificate(cert) == ["support is not connected"]


def test_single_vertex_certificate():
    cert = EulerianCertificate(MultiGraph(1))
    assert is_valid_certificate(cert)
    assert cert.visits == (1,)
    assert certificate_to_traversal(cert) == [0]
    assert certificate_from_traversal(MultiGraph(1), [0]).mult == ()


def test_empty_graph_has_no_certificate():
    assert validate_certificate(EulerianCertificate(MultiGraph(0))) == [
        "the empty graph has no spanning closed walk"
    ]


def test_traversal_round_trip_counts_visits():
    path = MultiGraph.from_edges(3, [(0, 1), (1, 2)])
    cert = certificate_from_traversal(path, [0, 1, 2, 1, 0])
    sequence = certificate_to_traversal(cert)
    assert sequence[0] == sequence[-1] == 0
    assert sorted(sequence[:-1]) == [0, 1, 1, 2]
    assert certificate_from_traversal(path, sequence) == cert


def test_open_sequence_is_rejected():
    with pytest.raises(PreconditionError):
        certificate_from_traversal(square(), [0, 1, 2])
    with pytest.raises(PreconditionError):
        EulerianCertificate(square(), (), "tour")


def test_respects_caps():
    path = MultiGraph.from_edges(3, [(0, 1), (1, 2)])
    cert = certificate_from_traversal(path, [0, 1, 2, 1, 0], WALK)
    assert respects_caps(cert, {1: 2})
    assert not respects_caps(cert, {1: 1})
    assert respects_caps(cert, {})


def test_multiplicities_are_merged():
    cert = EulerianCertificate(square(), ((1, 0, 1), (0, 1, 1), (2, 3, 0)))
    assert cert.mult == ((0, 1, 2),)
    assert cert.multiplicity(1, 0) == 2
    assert cert.multiplicity(2, 3) == 0
