"""Exhaustive sweeps over small graphs from the networkx atlas.

Most of these run every connected graph on at most seven vertices, plus a
seeded sample on eight, through an exact search and are marked slow.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import List

import networkx as nx
import pytest

from core import (
    TRAIL,
    WALK,
    MultiGraph,
    check_trail_hypothesis,
    check_walk_hypothesis,
    find_bounded_walk,
    find_disjoint_spanning_trees,
    is_independent,
    is_k_connected,
    is_valid_certificate,
    is_valid_tree_pack,
    min_trail_number,
    min_walk_number,
    nash_williams_check,
    omega_value,
    reduce_to_bipartite_witness,
    replay_trace,
)

from .conftest import from_nx
from .oracles import has_hamilton_cycle, min_k_by_traversal


@lru_cache(maxsize=None)
def connected_atlas(max_n: int = 7) -> List[MultiGraph]:
    return [
        from_nx(g)
        for g in nx.graph_atlas_g()[1:]
        if g.number_of_nodes() <= max_n and nx.is_connected(g)
    ]


@lru_cache(maxsize=None)
def eight_vertex_sample(count: int = 80) -> List[MultiGraph]:
    """Seeded random connected graphs on 8 vertices; the atlas stops at 7."""
    graphs = []
    seed = 0
    while len(graphs) < count:
        g = nx.gnm_random_graph(8, 7 + seed % 15, seed=seed)
        seed += 1
        if nx.is_connected(g):
            graphs.append(from_nx(g))
    return graphs


@lru_cache(maxsize=None)
def sweep_graphs() -> List[MultiGraph]:
    return connected_atlas() + eight_vertex_sample()


@lru_cache(maxsize=None)
def three_connected_sweep() -> List[MultiGraph]:
    return [g for g in sweep_graphs() if g.n >= 4 and is_k_connected(g, 3)]


def independent_sets(graph: MultiGraph):
    for size in range(graph.n + 1):
        for subset in combinations(graph.vertices, size):
            if is_independent(graph, subset):
                yield subset


@pytest.mark.slow
def test_minimum_numbers_match_direct_traversal():
    for graph in sweep_graphs():
        assert min_walk_number(graph) == min_k_by_traversal(graph, WALK)
        assert min_trail_number(graph) == min_k_by_traversal(graph, TRAIL)


@pytest.mark.slow
def test_one_walks_are_exactly_hamilton_cycles():
    for graph in sweep_graphs():
        if graph.n >= 3:
            assert (find_bounded_walk(graph, 1) is not None) == has_hamilton_cycle(graph)


@pytest.mark.slow
def test_planar_three_connected_graphs_have_two_walks():
    graphs = [g for g in three_connected_sweep() if nx.check_planarity(g.to_networkx())[0]]
    graphs += [
        from_nx(nx.wheel_graph(n)) for n in (8, 9, 10)
    ] + [
        from_nx(nx.circular_ladder_graph(5)),
        from_nx(nx.cubical_graph()),
        from_nx(nx.octahedral_graph()),
    ]
    for graph in graphs:
        assert min_walk_number(graph) <= 2


@pytest.mark.parametrize("n", range(2, 9))
def test_omega_of_trees(n):
    for tree in nx.nonisomorphic_trees(n):
        assert omega_value(from_nx(tree)) == Fraction(n + 1, 2)


@pytest.mark.slow
def test_tree_packing_agrees_with_partition_condition():
    for graph in sweep_graphs():
        pack = find_disjoint_spanning_trees(graph, 2)
        assert (pack is not None) == nash_williams_check(graph, 2)
        if pack is not None:
            assert is_valid_tree_pack(graph, pack)


@pytest.mark.slow
def test_walk_hypothesis_yields_bounded_walks():
    for graph in three_connected_sweep():
        for x in independent_sets(graph):
            for k in (1, 2, 3):
                if check_walk_hypothesis(graph, x, k).satisfied:
                    cert = find_bounded_walk(graph, {v: k for v in x}, WALK)
                    assert cert is not None, (graph.edges, x, k)


@pytest.mark.slow
def test_trail_hypothesis_yields_bounded_trails():
    for graph in sweep_graphs():
        for k in (1, 2):
            if check_trail_hypothesis(graph, k).satisfied:
                assert find_bounded_walk(graph, k, TRAIL) is not None, (graph.edges, k)


@pytest.mark.slow
def test_reduction_never_returns_a_witness_on_small_graphs():
    for graph in three_connected_sweep():
        reduction = reduce_to_bipartite_witness(graph, 3)
        assert reduction.witness is None
        assert is_valid_certificate(reduction.certificate)
        assert reduction.certificate.max_visits <= 3
        assert is_k_connected(replay_trace(graph, reduction.trace), 3)


@pytest.mark.slow
def test_lower_bound_graphs_need_two_visits():
    assert min_trail_number(from_nx(nx.complete_bipartite_graph(4, 5))) == 2
    assert min_trail_number(from_nx(nx.complete_bipartite_graph(4, 8))) == 2
