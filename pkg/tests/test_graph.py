from __future__ import annotations

import random

import pytest

from conftest import random_graph
from oracles import shortest_cycle
from cubiclab.graph import (
    INFINITE,
    DuplicateEdgeError,
    Graph,
    LoopError,
    NotBipartite,
    VertexRangeError,
    bipartition,
    components,
    disjoint_union,
    girth,
    is_bipartite,
    is_connected,
    is_regular,
)


def cycle(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def test_edges_are_normalised():
    g = Graph(3, [(2, 0), (1, 0)])
    assert g.edges == ((0, 1), (0, 2))
    assert g.adj == ((1, 2), (0,), (0,))
    assert g.degrees() == [2, 1, 1]
    assert g.has_edge(2, 0) and not g.has_edge(1, 2)


@pytest.mark.parametrize(
    "edges, exc",
    [([(0, 0)], LoopError), ([(0, 1), (1, 0)], DuplicateEdgeError), ([(0, 3)], VertexRangeError)],
)
def test_rejects_bad_edges(edges, exc):
    with pytest.raises(exc):
        Graph(3, edges)


def test_from_adjacency_matches_edges():
    g = Graph.from_adjacency([[1, 2], [0], [0]])
    assert g == Graph(3, [(0, 1), (0, 2)])


def test_girth_of_small_graphs():
    assert girth(cycle(5)) == 5
    assert girth(Graph(4, [(0, 1), (1, 2), (2, 3)])) is INFINITE
    assert girth(Graph(0)) is INFINITE
    assert INFINITE > 10**9


def test_girth_against_edge_removal_oracle():
    rng = random.Random(3)
    for _ in range(300):
        g = random_graph(rng, rng.randint(1, 9), rng.choice([0.2, 0.35, 0.6]))
        want = shortest_cycle(g)
        got = girth(g)
        assert (got is INFINITE) if want is None else got == want


def test_bipartition_and_odd_cycle_witness():
    a, b = bipartition(cycle(6))
    assert a == frozenset({0, 2, 4}) and b == frozenset({1, 3, 5})
    with pytest.raises(NotBipartite) as info:
        bipartition(cycle(7))
    cyc = info.value.cycle
    assert len(cyc) % 2 == 1
    g = cycle(7)
    assert all(g.has_edge(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc)))
    assert not is_bipartite(cycle(3))


def test_components_and_union():
    g = disjoint_union(cycle(3), cycle(4))
    assert g.n == 7
    assert components(g) == [[0, 1, 2], [3, 4, 5, 6]]
    assert not is_connected(g)
    assert is_regular(g, 2) and not is_regular(g, 3)


def test_relabel_preserves_structure():
    g = Graph(4, [(0, 1), (1, 2), (2, 3)])
    h = g.relabel([3, 2, 1, 0])
    assert h.edges == ((0, 1), (1, 2), (2, 3))
    assert g.subgraph_without_edges([(1, 2)]).m == 2
