"""Tests for graph6, sparse6 and edge-list reading and writing."""

from pathlib import Path

import networkx as nx
import pytest
from hypothesis import given, settings

from core import (
    MultiGraph,
    ParseError,
    SerializationError,
    detect_format,
    iter_corpus,
    parse_corpus,
    parse_edge_instances,
    parse_edge_list,
    parse_graph,
    parse_graph6,
    parse_sparse6,
    read_graphs,
    serialize_graph,
)

from .conftest import FIXTURES, from_nx
from .strategies import multigraphs, simple_graphs


def test_graph6_complete_graphs():
    assert parse_graph6("C~") == from_nx(nx.complete_graph(4))
    assert parse_graph6(b">>graph6<<F~~~w\n") == from_nx(nx.complete_graph(7))


def test_graph6_padding_bits_must_be_zero():
    with pytest.raises(ParseError) as info:
        parse_graph6("D~~")
    assert info.value.offset == 2
    assert info.value.fmt == "graph6"


def test_graph6_truncated_body():
    with pytest.raises(ParseError, match="truncated"):
        parse_graph6("D~")


def test_graph6_non_printable_byte():
    with pytest.raises(ParseError) as info:
        parse_graph6(b"C\x01")
    assert info.value.offset == 1


@pytest.mark.parametrize(
    "text, fmt, offset",
    [
        ("Cé", "graph6", 1),
        (":Bé", "sparse6", 2),
        ("3 1\n0 1é\n", "edge-list", 7),
    ],
)
def test_non_ascii_text_is_rejected_at_its_offset(text, fmt, offset):
    with pytest.raises(ParseError, match="non-ASCII") as info:
        parse_graph(text, fmt)
    assert info.value.offset == offset
    assert info.value.fmt == fmt


def test_non_ascii_corpus_line_reports_file_offset():
    with pytest.raises(ParseError) as info:
        parse_corpus("C~\nCÿ\n", "graph6")
    assert info.value.offset == 4


def test_corpus_error_offset_is_relative_to_file():
    with pytest.raises(ParseError) as info:
        parse_corpus("C~\nC~~\n", "graph6")
    assert info.value.offset == 5


def test_corpus_keeps_raw_records():
    records = list(iter_corpus(b"C~\n\nF~~~w\n", "graph6"))
    assert [raw for raw, _ in records] == [b"C~", b"F~~~w"]
    assert [graph.n for _, graph in records] == [4, 7]


def test_sparse6_requires_colon():
    with pytest.raises(ParseError, match="':'"):
        parse_sparse6("A_")


def test_sparse6_from_networkx_multigraph():
    multi = nx.MultiGraph()
    multi.add_edges_from([(0, 1), (0, 1), (1, 2), (2, 3)])
    graph = parse_sparse6(nx.to_sparse6_bytes(multi))
    assert graph.edges == ((0, 1, 2), (1, 2, 1), (2, 3, 1))


@given(multigraphs(max_n=7))
@settings(max_examples=60)
def test_sparse6_reads_networkx_output(graph):
    encoded = nx.to_sparse6_bytes(graph.to_networkx(multigraph=True), header=False)
    assert parse_sparse6(encoded) == graph


@given(simple_graphs(min_n=1, max_n=9, connected=False))
@settings(max_examples=60)
def test_graph6_reads_networkx_output(graph):
    encoded = nx.to_graph6_bytes(graph.to_networkx(), header=False)
    assert parse_graph6(encoded) == graph


def test_edge_list_with_comments_and_multiplicity():
    text = "# two parallel edges\n3 2\n0 1 2\n2 1  # trailing comment\n"
    assert parse_edge_list(text).edges == ((0, 1, 2), (1, 2, 1))
    n, instances = parse_edge_instances(text)
    assert n == 3
    assert instances == [(0, 1), (0, 1), (1, 2)]


def test_edge_list_vertex_out_of_range():
    with pytest.raises(ParseError) as info:
        parse_edge_list("5 1\n0 7\n")
    assert info.value.offset == 4


@pytest.mark.parametrize(
    "text, message",
    [
        ("", "missing header"),
        ("3\n", "header"),
        ("3 2\n0 1\n", "declares 2"),
        ("3 1\n1 1\n", "loop"),
        ("3 1\n0 1 0\n", "multiplicity"),
        ("3 1\n0 x\n", "not an integer"),
    ],
)
def test_edge_list_errors(text, message):
    with pytest.raises(ParseError, match=message):
        parse_edge_list(text)


def test_serialize_graph6_rejects_multigraph():
    with pytest.raises(SerializationError):
        serialize_graph(MultiGraph.from_edges(2, [(0, 1, 2)]), "graph6")


def test_serialize_edge_list(k4):
    data = serialize_graph(k4, "edge-list")
    assert data.startswith(b"4 6\n0 1\n")
    assert data.endswith(b"\n")
    assert parse_graph(data, "edge-list") == k4


def test_serialize_then_parse_each_format(k5):
    for fmt in ("graph6", "sparse6", "edge-list"):
        assert parse_graph(serialize_graph(k5, fmt), fmt) == k5


def test_unknown_format():
    with pytest.raises(ValueError):
        parse_graph("C~", "dot")
    with pytest.raises(ValueError):
        detect_format(Path("graphs.txt"))


def test_detect_format_from_extension():
    assert detect_format(Path("a.g6")) == "graph6"
    assert detect_format(Path("a.S6")) == "sparse6"
    assert detect_format(Path("a.el")) == "edge-list"
    assert detect_format(Path("a.txt"), "graph6") == "graph6"


def test_fixture_files():
    assert read_graphs(FIXTURES / "k4.g6") == [from_nx(nx.complete_graph(4))]
    assert read_graphs(FIXTURES / "k7.g6") == [from_nx(nx.complete_graph(7))]
    assert read_graphs(FIXTURES / "k5.el") == [from_nx(nx.complete_graph(5))]
