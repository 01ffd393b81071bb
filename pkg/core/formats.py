"""graph6 / sparse6 / edge-list reading and writing.

Decoding is done here so that errors can name the byte offset at fault and
loops are rejected instead of silently kept; encoding is delegated to
networkx, whose writers follow the nauty format description.
"""

from pathlib import Path
from typing import Iterator, List, Optional, Tuple, Union

import networkx as nx

from .constants import FORMAT_BY_EXTENSION, FORMATS
from .errors import ParseError, SerializationError
from .graph import Edge, MultiGraph

GRAPH6_HEADER = b">>graph6<<"
SPARSE6_HEADER = b">>sparse6<<"

TextInput = Union[bytes, str]


def _as_bytes(text: TextInput, fmt: str, base: int = 0) -> bytes:
    if isinstance(text, str):
        try:
            return text.encode("ascii")
        except UnicodeEncodeError as e:
            # Characters before e.start are ASCII, so e.start is also the byte offset
            raise ParseError(f"non-ASCII character {text[e.start]!r}", base + e.start, fmt) from None
    return bytes(text)


def _check_printable(data: bytes, start: int, end: int, fmt: str, base: int) -> None:
    for i in range(start, end):
        if not 63 <= data[i] <= 126:
            raise ParseError(
                f"byte {data[i]!r} outside the printable range 63..126", base + i, fmt
            )


def _read_size(data: bytes, pos: int, fmt: str, base: int) -> Tuple[int, int]:
    """Decode N(n) starting at `pos`; returns (n, position after it)."""
    if pos >= len(data):
        raise ParseError("missing vertex count", base + pos, fmt)
    _check_printable(data, pos, pos + 1, fmt, base)
    if data[pos] != 126:
        return data[pos] - 63, pos + 1

    if pos + 1 < len(data) and data[pos + 1] == 126:
        width, start = 6, pos + 2
    else:
        width, start = 3, pos + 1
    if start + width > len(data):
        raise ParseError("truncated vertex count", base + len(data), fmt)
    _check_printable(data, start, start + width, fmt, base)
    n = 0
    for i in range(start, start + width):
        n = (n << 6) | (data[i] - 63)
    return n, start + width


def _strip(data: bytes) -> bytes:
    return data.rstrip(b"\r\n \t")


def parse_graph6(text: TextInput, base_offset: int = 0) -> MultiGraph:
    """Decode one graph6 string (optional >>graph6<< header)."""
    data = _strip(_as_bytes(text, "graph6", base_offset))
    pos = len(GRAPH6_HEADER) if data.startswith(GRAPH6_HEADER) else 0
    n, pos = _read_size(data, pos, "graph6", base_offset)
    _check_printable(data, pos, len(data), "graph6", base_offset)

    bit_count = n * (n - 1) // 2
    needed = (bit_count + 5) // 6
    body = data[pos:]
    if len(body) < needed:
        raise ParseError(
            f"adjacency data truncated: {len(body)} of {needed} bytes",
            base_offset + len(data), "graph6",
        )
    if len(body) > needed:
        raise ParseError(
            f"adjacency data longer than {n} vertices allow",
            base_offset + pos + needed, "graph6",
        )

    edges: List[Edge] = []
    bit = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[bit // 6] - 63
            if byte >> (5 - bit % 6) & 1:
                edges.append((i, j))
            bit += 1
    if needed and bit_count % 6:
        padding = (body[-1] - 63) & ((1 << (6 - bit_count % 6)) - 1)
        if padding:
            raise ParseError(
                f"padding bits name a vertex beyond n={n}",
                base_offset + pos + needed - 1, "graph6",
            )
    return MultiGraph.from_edges(n, edges)


def parse_sparse6(text: TextInput, base_offset: int = 0) -> MultiGraph:
    """Decode one sparse6 string (optional >>sparse6<< header, leading ':')."""
    data = _strip(_as_bytes(text, "sparse6", base_offset))
    pos = len(SPARSE6_HEADER) if data.startswith(SPARSE6_HEADER) else 0
    if pos >= len(data) or data[pos:pos + 1] != b":":
        raise ParseError("sparse6 data must start with ':'", base_offset + pos, "sparse6")
    pos += 1
    n, pos = _read_size(data, pos, "sparse6", base_offset)
    _check_printable(data, pos, len(data), "sparse6", base_offset)

    chunks = [c - 63 for c in data[pos:]]
    last = len(chunks) - 1
    k = 1
    while 1 << k < n:
        k += 1

    edges: List[Edge] = []
    index = -1
    d = 0
    d_len = 0
    v = 0
    while True:
        if d_len < 1:
            index += 1
            if index > last:
                break
            d = chunks[index]
            d_len = 6
        record_start = index
        d_len -= 1
        b = (d >> d_len) & 1
        x = d & ((1 << d_len) - 1)
        x_len = d_len
        truncated = False
        while x_len < k:
            index += 1
            if index > last:
                truncated = True
                break
            d = chunks[index]
            d_len = 6
            x = (x << 6) + d
            x_len += 6
        if truncated:
            break
        x >>= x_len - k
        d_len = x_len - k

        if b == 1:
            v += 1
        if x >= n or v >= n:
            if record_start == last:
                break  # padding
            raise ParseError(
                f"vertex index out of range for n={n}",
                base_offset + pos + record_start, "sparse6",
            )
        if x > v:
            v = x
        elif x == v:
            raise ParseError(
                f"loop at vertex {v}", base_offset + pos + record_start, "sparse6"
            )
        else:
            edges.append((x, v))
    return MultiGraph.from_edges(n, edges)


def _edge_list_lines(data: bytes) -> Iterator[Tuple[int, List[bytes]]]:
    """Yield (offset, tokens) for every non-blank, non-comment line."""
    offset = 0
    for raw in data.split(b"\n"):
        line = raw.split(b"#", 1)[0]
        tokens = line.split()
        if tokens:
            yield offset, tokens
        offset += len(raw) + 1


def _parse_int(token: bytes, offset: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"{what} {token!r} is not an integer", offset, "edge-list") from None


def parse_edge_instances(text: TextInput, base_offset: int = 0) -> Tuple[int, List[Edge]]:
    """Decode an edge list into (n, edge copies in file order)."""
    data = _as_bytes(text, "edge-list", base_offset)
    lines = list(_edge_list_lines(data))
    if not lines:
        raise ParseError("missing header 'n m'", base_offset, "edge-list")

    header_offset, header = lines[0]
    header_offset += base_offset
    if len(header) != 2:
        raise ParseError("header must be 'n m'", header_offset, "edge-list")
    n = _parse_int(header[0], header_offset, "vertex count")
    m = _parse_int(header[1], header_offset, "edge count")
    if n < 0 or m < 0:
        raise ParseError("header values must be non-negative", header_offset, "edge-list")
    if len(lines) - 1 != m:
        raise ParseError(
            f"header declares {m} edge lines, found {len(lines) - 1}",
            base_offset + len(data), "edge-list",
        )

    instances: List[Edge] = []
    for offset, tokens in lines[1:]:
        offset += base_offset
        if len(tokens) not in (2, 3):
            raise ParseError("edge line must be 'u v [mult]'", offset, "edge-list")
        u = _parse_int(tokens[0], offset, "vertex")
        v = _parse_int(tokens[1], offset, "vertex")
        mult = _parse_int(tokens[2], offset, "multiplicity") if len(tokens) == 3 else 1
        for w in (u, v):
            if not 0 <= w < n:
                raise ParseError(f"vertex {w} out of range for n={n}", offset, "edge-list")
        if u == v:
            raise ParseError(f"loop at vertex {u}", offset, "edge-list")
        if mult < 1:
            raise ParseError(f"multiplicity {mult} must be positive", offset, "edge-list")
        pair = (u, v) if u < v else (v, u)
        instances.extend([pair] * mult)
    return n, instances


def parse_edge_list(text: TextInput, base_offset: int = 0) -> MultiGraph:
    """Decode an edge list: header 'n m', then m lines 'u v [mult]'."""
    n, instances = parse_edge_instances(text, base_offset)
    return MultiGraph.from_edges(n, instances)


def parse_graph(text: TextInput, fmt: str) -> MultiGraph:
    """Parse one graph in the given format.

    Args:
        text: Encoded graph
        fmt: One of 'graph6', 'sparse6', 'edge-list'

    Raises:
        ParseError: If the input is malformed, out of range or has a loop
    """
    if fmt == "graph6":
        return parse_graph6(text)
    if fmt == "sparse6":
        return parse_sparse6(text)
    if fmt == "edge-list":
        return parse_edge_list(text)
    raise ValueError(f"unknown format '{fmt}', expected one of {FORMATS}")


def iter_corpus(text: TextInput, fmt: str) -> Iterator[Tuple[bytes, MultiGraph]]:
    """Yield (raw record, graph) for every graph in a corpus.

    graph6 and sparse6 files hold one graph per line; an edge-list file holds
    one graph. Error offsets are relative to the whole input.
    """
    data = _as_bytes(text, fmt)
    if fmt == "edge-list":
        yield data, parse_edge_list(data)
        return

    if fmt not in ("graph6", "sparse6"):
        raise ValueError(f"unknown format '{fmt}', expected one of {FORMATS}")
    parser = parse_graph6 if fmt == "graph6" else parse_sparse6
    offset = 0
    for raw in data.split(b"\n"):
        line = raw.strip()
        if line:
            leading = len(raw) - len(raw.lstrip())
            yield line, parser(line, base_offset=offset + leading)
        offset += len(raw) + 1


def parse_corpus(text: TextInput, fmt: str) -> List[MultiGraph]:
    """All graphs of a corpus, in order."""
    return [graph for _, graph in iter_corpus(text, fmt)]


def detect_format(path: Path, fmt: Optional[str] = None) -> str:
    """The explicit format, else the one implied by the file extension."""
    if fmt is not None:
        return fmt
    try:
        return FORMAT_BY_EXTENSION[path.suffix.lower()]
    except KeyError:
        raise ValueError(
            f"cannot infer the format of '{path}'; use --format"
        ) from None


def read_graphs(path: Path, fmt: Optional[str] = None) -> List[MultiGraph]:
    """Read every graph stored in a file."""
    return parse_corpus(path.read_bytes(), detect_format(path, fmt))


def serialize_graph(graph: MultiGraph, fmt: str) -> bytes:
    """Encode a graph; the inverse of parse_graph (no trailing newline).

    Raises:
        SerializationError: For graph6 output of a multigraph
    """
    if fmt == "graph6":
        if not graph.is_simple:
            raise SerializationError("graph6 cannot encode parallel edges; use sparse6")
        return nx.to_graph6_bytes(graph.to_networkx(), header=False).rstrip(b"\n")
    if fmt == "sparse6":
        return nx.to_sparse6_bytes(graph.to_networkx(multigraph=True), header=False).rstrip(b"\n")
    if fmt == "edge-list":
        lines = [f"{graph.n} {len(graph.edges)}"]
        for u, v, m in graph.edges:
            lines.append(f"{u} {v}" if m == 1 else f"{u} {v} {m}")
        return ("\n".join(lines) + "\n").encode("ascii")
    raise ValueError(f"unknown format '{fmt}', expected one of {FORMATS}")
