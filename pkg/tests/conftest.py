"""Shared fixtures: named graphs, fixture files and isolated settings."""

from pathlib import Path
from typing import Callable
from unittest.mock import patch

import networkx as nx
import pytest

import core
from core import MultiGraph

FIXTURES = Path(__file__).parent.parent / "fixtures"


def from_nx(graph: nx.Graph) -> MultiGraph:
    """Convert a networkx graph, numbering nodes in sorted order."""
    return MultiGraph.from_networkx(nx.convert_node_labels_to_integers(graph, ordering="sorted"))


def two_k4_bridge() -> MultiGraph:
    """Two copies of K_4 joined by the edge 3-4."""
    edges = [(u, v) for u in range(4) for v in range(u + 1, 4)]
    edges += [(u + 4, v + 4) for u, v in edges]
    edges.append((3, 4))
    return MultiGraph.from_edges(8, edges)


def is_closed_cycle(graph: MultiGraph, cycle, targets=()) -> bool:
    """True if the sequence is a simple closed cycle of the graph through the targets."""
    if len(cycle) < 4 or cycle[0] != cycle[-1]:
        return False
    ring = cycle[:-1]
    if len(set(ring)) != len(ring):
        return False
    if any(not graph.has_edge(a, b) for a, b in zip(cycle, cycle[1:])):
        return False
    return set(targets) <= set(ring)


@pytest.fixture
def k4() -> MultiGraph:
    return from_nx(nx.complete_graph(4))


@pytest.fixture
def k5() -> MultiGraph:
    return from_nx(nx.complete_graph(5))


@pytest.fixture
def petersen() -> MultiGraph:
    return from_nx(nx.petersen_graph())


@pytest.fixture
def octahedron() -> MultiGraph:
    return from_nx(nx.octahedral_graph())


@pytest.fixture
def icosahedron() -> MultiGraph:
    return from_nx(nx.icosahedral_graph())


@pytest.fixture
def cube() -> MultiGraph:
    return from_nx(nx.cubical_graph())


@pytest.fixture
def wheel6() -> MultiGraph:
    """Hub 0 joined to the 5-cycle 1..5."""
    return from_nx(nx.wheel_graph(6))


@pytest.fixture
def prism() -> MultiGraph:
    return from_nx(nx.circular_ladder_graph(3))


@pytest.fixture
def three_connected_fixtures() -> dict:
    """Every named 3-connected graph on at most 12 vertices used by the suite."""
    return {
        "K4": from_nx(nx.complete_graph(4)),
        "K5": from_nx(nx.complete_graph(5)),
        "K6": from_nx(nx.complete_graph(6)),
        "W6": from_nx(nx.wheel_graph(6)),
        "W8": from_nx(nx.wheel_graph(8)),
        "prism": from_nx(nx.circular_ladder_graph(3)),
        "cube": from_nx(nx.cubical_graph()),
        "octahedron": from_nx(nx.octahedral_graph()),
        "petersen": from_nx(nx.petersen_graph()),
        "K33": from_nx(nx.complete_bipartite_graph(3, 3)),
        "K34": from_nx(nx.complete_bipartite_graph(3, 4)),
        "icosahedron": from_nx(nx.icosahedral_graph()),
    }


@pytest.fixture
def write_graph(tmp_path: Path) -> Callable[..., Path]:
    """Write a graph to a temporary file in the given format and return the path."""

    def _write(graph: MultiGraph, name: str = "graph.g6", fmt: str = "graph6") -> Path:
        path = tmp_path / name
        path.write_bytes(core.serialize_graph(graph, fmt) + (b"\n" if fmt != "edge-list" else b""))
        return path

    return _write


@pytest.fixture
def isolated_settings(tmp_path: Path):
    """Point the settings file and the log file into a temporary directory."""
    data_root = tmp_path / "data"
    log_file = data_root / "run.log"
    with patch("core.config.DATA_ROOT", data_root):
        with patch("core.config.CONFIG_FILE", data_root / "config.json"):
            with patch.dict("core.config.DEFAULT_SETTINGS", {"log_file": str(log_file)}):
                yield data_root, log_file
    core.logger.configure(None)
    core.logger.clear()
