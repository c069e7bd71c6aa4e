"""Named graphs, star products and membership in star-product families."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence

from .graph import Graph, components, is_connected, is_regular
from .symmetry import certificate

COUNTEREXAMPLE_ADJLIST = """\
0: 1 13 29
1: 0 2 26
2: 1 3 21
3: 2 4 28
4: 3 5 19
5: 4 6 22
6: 5 7 15
7: 6 8 24
8: 7 9 27
9: 8 10 18
10: 9 11 25
11: 10 12 20
12: 11 13 17
13: 0 12 14
14: 13 15 23
15: 6 14 16
16: 15 17 29
17: 12 16 18
18: 9 17 19
19: 4 18 20
20: 11 19 21
21: 2 20 22
22: 5 21 23
23: 14 22 24
24: 7 23 25
25: 10 24 26
26: 1 25 27
27: 8 26 28
28: 3 27 29
29: 0 16 28
"""


def lcf(n: int, jumps: Sequence[int], repeat: int) -> Graph:
    """Hamiltonian cubic graph from LCF notation ``[jumps]^repeat``."""
    edges = {(i, (i + 1) % n) for i in range(n)}
    seq = list(jumps) * repeat
    for i, j in enumerate(seq):
        w = (i + j) % n
        edges.add((min(i, w), max(i, w)))
    return Graph(n, sorted({(min(u, v), max(u, v)) for u, v in edges}))


def k33() -> Graph:
    return Graph(6, [(i, j) for i in range(3) for j in range(3, 6)])


def heawood() -> Graph:
    return lcf(14, [5, -5], 7)


def pappus() -> Graph:
    return lcf(18, [5, 7, -7, 7, -7, -5], 3)


def moebius_kantor() -> Graph:
    outer = [(i, (i + 1) % 8) for i in range(8)]
    spokes = [(i, i + 8) for i in range(8)]
    inner = [(8 + i, 8 + (i + 3) % 8) for i in range(8)]
    return Graph(16, outer + spokes + inner)


def counterexample() -> Graph:
    from .codec import read_adjlist

    return read_adjlist(COUNTEREXAMPLE_ADJLIST)


NAMED = {
    "K33": k33,
    "Heawood": heawood,
    "Pappus": pappus,
    "MoebiusKantor": moebius_kantor,
    "CounterexampleG": counterexample,
}


def named(name: str) -> Graph:
    try:
        return NAMED[name]()
    except KeyError:
        raise KeyError(f"unknown graph {name!r}; known: {', '.join(NAMED)}") from None


class StarProductError(ValueError):
    pass


@dataclass(frozen=True)
class StarProductSpec:
    g1: Graph
    g2: Graph
    x: int
    y: int
    pairing: Optional[tuple[tuple[int, int], ...]] = None
    """Pairs ``(x_i, y_i)`` of neighbours; default pairs them in sorted order."""

    def resolved_pairing(self) -> tuple[tuple[int, int], ...]:
        nx_, ny_ = self.g1.adj[self.x], self.g2.adj[self.y]
        if len(nx_) != 3 or len(ny_) != 3:
            raise StarProductError("x and y must both have degree 3")
        if self.pairing is None:
            return tuple(zip(nx_, ny_))
        pairs = tuple(self.pairing)
        if sorted(a for a, _ in pairs) != list(nx_) or sorted(b for _, b in pairs) != list(ny_):
            raise StarProductError("pairing must be a bijection between the neighbourhoods")
        return pairs


def star_product(spec: StarProductSpec | Graph, *args, **kwargs) -> Graph:
    """``(G1 - x) + (G2 - y)`` joined by the three paired edges.

    Vertices of ``G1 - x`` keep their order and come first, followed by
    those of ``G2 - y``. Accepts either a spec or ``(g1, g2, x, y, pairing)``.
    """
    if isinstance(spec, Graph):
        spec = StarProductSpec(spec, *args, **kwargs)
    pairs = spec.resolved_pairing()
    g1, g2 = spec.g1, spec.g2
    m1 = {v: i for i, v in enumerate(v for v in range(g1.n) if v != spec.x)}
    off = g1.n - 1
    m2 = {v: off + i for i, v in enumerate(v for v in range(g2.n) if v != spec.y)}
    edges = [(m1[u], m1[v]) for u, v in g1.edges if spec.x not in (u, v)]
    edges += [(m2[u], m2[v]) for u, v in g2.edges if spec.y not in (u, v)]
    edges += [(m1[a], m2[b]) for a, b in pairs]
    return Graph(g1.n + g2.n - 2, edges)


@dataclass(frozen=True)
class Decomposition:
    g1: Graph
    g2: Graph
    cut: tuple[tuple[int, int], ...]
    side_a: tuple[int, ...]
    side_b: tuple[int, ...]


def _bridges(n: int, adj: Sequence[Sequence[int]]) -> list[tuple[int, int]]:
    disc = [-1] * n
    low = [0] * n
    out = []
    t = 0
    for root in range(n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = t
        t += 1
        stack = [(root, -1, iter(adj[root]))]
        while stack:
            u, pu, it = stack[-1]
            for w in it:
                if w == pu:
                    continue
                if disc[w] < 0:
                    disc[w] = low[w] = t
                    t += 1
                    stack.append((w, u, iter(adj[w])))
                    break
                low[u] = min(low[u], disc[w])
            else:
                stack.pop()
                if pu >= 0:
                    low[pu] = min(low[pu], low[u])
                    if low[u] > disc[pu]:
                        out.append((min(u, pu), max(u, pu)))
    return out


def essential_3_cuts(g: Graph) -> Iterable[tuple[tuple[int, int], ...]]:
    """Independent 3-edge cuts with two sides of at least two vertices each,
    in lexicographic order of the sorted edge triple."""
    edges = g.edges
    for i, e1 in enumerate(edges):
        for j in range(i + 1, len(edges)):
            e2 = edges[j]
            if set(e1) & set(e2):
                continue
            drop = {e1, e2}
            adj = [[w for w in g.adj[v] if (min(v, w), max(v, w)) not in drop] for v in range(g.n)]
            for e3 in sorted(_bridges(g.n, adj)):
                if e3 <= e2 or set(e3) & (set(e1) | set(e2)):
                    continue
                cut = (e1, e2, e3)
                rest = Graph(g.n, [e for e in edges if e not in cut])
                comps = components(rest)
                if len(comps) != 2 or min(len(c) for c in comps) < 2:
                    continue
                side = set(comps[0])
                if all((u in side) != (v in side) for u, v in cut):
                    yield cut


def _contract(g: Graph, side: Sequence[int], cut) -> Graph:
    index = {v: i for i, v in enumerate(side)}
    k = len(side)
    edges = [(index[u], index[v]) for u, v in g.edges if u in index and v in index]
    for u, v in cut:
        edges.append((index[u] if u in index else index[v], k))
    return Graph(k + 1, edges)


def star_decompose(g: Graph) -> Optional[Decomposition]:
    """Undo a star product along the least essential independent 3-cut.

    Each side is closed off by one new vertex (the last index) joined to its
    three cut endpoints. Returns None when ``g`` is irreducible.
    """
    if not is_regular(g, 3) or not is_connected(g):
        return None
    for cut in essential_3_cuts(g):
        rest = Graph(g.n, [e for e in g.edges if e not in cut])
        a, b = components(rest)
        if 0 not in a:
            a, b = b, a
        return Decomposition(_contract(g, a, cut), _contract(g, b, cut), cut, tuple(a), tuple(b))
    return None


def in_family(g: Graph, basis: Iterable[Graph], _memo: Optional[dict] = None) -> bool:
    """Can ``g`` be built from ``basis`` graphs by repeated star products?

    Decomposes along the least essential 3-cut until pieces are irreducible
    and compares each piece with the basis by certificate.
    """
    basis_certs = frozenset(certificate(b) for b in basis)
    return _in_family(g, basis_certs, {} if _memo is None else _memo)


def _in_family(g: Graph, basis_certs: frozenset, memo: dict) -> bool:
    c = certificate(g)
    if c in basis_certs:
        return True
    if c in memo:
        return memo[c]
    d = star_decompose(g)
    ok = d is not None and _in_family(d.g1, basis_certs, memo) and _in_family(d.g2, basis_certs, memo)
    memo[c] = ok
    return ok


def conjecture_basis(name: str) -> list[Graph]:
    """Generating sets of the two conjectured families."""
    if name == "2fh":
        return [k33(), heawood()]
    if name == "pseudo":
        return [k33(), heawood(), pappus()]
    raise KeyError(name)


def named_items() -> Mapping[str, Graph]:
    return {k: f() for k, f in NAMED.items()}
