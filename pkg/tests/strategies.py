"""Hypothesis strategies for small graphs."""

import hypothesis.strategies as st

from core import MultiGraph


@st.composite
def simple_graphs(draw, min_n: int = 1, max_n: int = 7, connected: bool = True) -> MultiGraph:
    """Random simple graphs; connected ones are grown from a random spanning tree."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = set()
    if connected:
        for v in range(1, n):
            edges.add((draw(st.integers(min_value=0, max_value=v - 1)), v))
    if pairs:
        edges |= set(draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))))
    return MultiGraph.from_edges(n, sorted(edges))


@st.composite
def multigraphs(draw, min_n: int = 2, max_n: int = 6, max_mult: int = 3) -> MultiGraph:
    """Random connected multigraphs: a simple connected graph with repeated edges."""
    base = draw(simple_graphs(min_n=min_n, max_n=max_n))
    triples = [
        (u, v, draw(st.integers(min_value=1, max_value=max_mult))) for u, v in base.pairs
    ]
    return MultiGraph.from_edges(base.n, triples)


@st.composite
def three_connected_graphs(draw, max_n: int = 8) -> MultiGraph:
    """Random 3-connected simple graphs.

    Starts from K_4 and applies random steps that keep 3-connectivity: adding
    an edge, or subdividing an edge uv with a new vertex w and joining w to a
    third vertex.
    """
    n = 4
    edges = {(u, v) for u in range(4) for v in range(u + 1, 4)}
    target = draw(st.integers(min_value=4, max_value=max_n))
    extra = draw(st.integers(min_value=0, max_value=4))
    while n < target:
        u, v = draw(st.sampled_from(sorted(edges)))
        x = draw(st.sampled_from([y for y in range(n) if y not in (u, v)]))
        w = n
        n += 1
        edges.discard((u, v))
        edges |= {(u, w), (v, w), (x, w)}
    for _ in range(extra):
        missing = [(a, b) for a in range(n) for b in range(a + 1, n) if (a, b) not in edges]
        if not missing:
            break
        edges.add(draw(st.sampled_from(missing)))
    return MultiGraph.from_edges(n, sorted(edges))
