from __future__ import annotations

import random

import pytest

from cubiclab import constructions
from cubiclab.generator import GenSpec, generate
from cubiclab.graph import Graph


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


def random_cubic(rng: random.Random, n: int) -> Graph:
    """Random simple cubic graph: pairing model, rejecting loops and multi-edges."""
    while True:
        points = [v for v in range(n) for _ in range(3)]
        rng.shuffle(points)
        edges = {(min(a, b), max(a, b)) for a, b in zip(points[::2], points[1::2])}
        if len(edges) == 3 * n // 2 and all(a != b for a, b in edges):
            return Graph(n, edges)


def shuffled(g: Graph, rng: random.Random) -> Graph:
    perm = list(range(g.n))
    rng.shuffle(perm)
    return g.relabel(perm)


@pytest.fixture(scope="session")
def named_graphs() -> dict[str, Graph]:
    return dict(constructions.named_items())


@pytest.fixture(scope="session")
def girth4_corpus() -> list[Graph]:
    """Connected cubic bipartite graphs on 6..16 vertices."""
    return [g for n in range(6, 17, 2) for g in generate(GenSpec(n, 4))]


@pytest.fixture(scope="session")
def girth6_corpus() -> list[Graph]:
    """Connected cubic bipartite girth >= 6 graphs on 14..20 vertices."""
    return [g for n in range(14, 21, 2) for g in generate(GenSpec(n, 6))]


def random_star_product(rng: random.Random, g1: Graph, g2: Graph):
    """Star product at random vertices with a random pairing; returns the
    product and the three joining edges in its labelling."""
    from cubiclab.constructions import star_product

    x, y = rng.randrange(g1.n), rng.randrange(g2.n)
    ys = list(g2.adj[y])
    rng.shuffle(ys)
    pairing = tuple(zip(g1.adj[x], ys))
    product = star_product(g1, g2, x, y, pairing)
    m1 = {v: i for i, v in enumerate(v for v in range(g1.n) if v != x)}
    m2 = {v: g1.n - 1 + i for i, v in enumerate(v for v in range(g2.n) if v != y)}
    joins = {(m1[a], m2[b]) for a, b in pairing}
    return product, joins
