"""Immutable simple undirected graphs on vertices 0..n-1."""

from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Base class for invalid graph construction."""


class LoopError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class VertexRangeError(GraphError):
    pass


class NotBipartite(Exception):
    """Raised by :func:`bipartition`; ``cycle`` is an odd closed walk witness."""

    def __init__(self, cycle: list[int]):
        super().__init__(f"odd cycle of length {len(cycle)}: {cycle}")
        self.cycle = cycle


class _Infinite:
    """Girth of a forest. Compares greater than every integer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITE"

    __str__ = __repr__

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("INFINITE")

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True


INFINITE = _Infinite()


class Graph:
    """Simple undirected graph.

    ``adj[v]`` is the sorted tuple of neighbours of ``v`` and ``nbr_bits[v]``
    the same set as an int bitmask. Instances are never mutated after
    construction, so they are hashable and may be shared between workers.
    """

    __slots__ = ("n", "adj", "nbr_bits", "_edges")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise VertexRangeError(f"negative vertex count {n}")
        bits = [0] * n
        norm = []
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise VertexRangeError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise LoopError(f"loop at vertex {u}")
            if bits[u] >> v & 1:
                raise DuplicateEdgeError(f"duplicate edge ({u}, {v})")
            bits[u] |= 1 << v
            bits[v] |= 1 << u
            norm.append((u, v) if u < v else (v, u))
        self.n = n
        self.nbr_bits = tuple(bits)
        self.adj = tuple(tuple(_bit_indices(b)) for b in bits)
        self._edges = tuple(sorted(norm))

    @classmethod
    def from_adjacency(cls, adj: Sequence[Iterable[int]]) -> "Graph":
        """Build from a symmetric adjacency list (each edge listed at both ends)."""
        edges = set()
        for u, nbrs in enumerate(adj):
            for v in nbrs:
                if v == u:
                    raise LoopError(f"loop at vertex {u}")
                edges.add((min(u, v), max(u, v)))
        g = cls(len(adj), sorted(edges))
        for u, nbrs in enumerate(adj):
            if sorted(nbrs) != list(g.adj[u]):
                raise GraphError(f"adjacency of vertex {u} is not symmetric")
        return g

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Sorted edge list with ``u < v``."""
        return self._edges

    @property
    def m(self) -> int:
        return len(self._edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.nbr_bits[u] >> v & 1)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self._edges])

    def subgraph_without_edges(self, removed: Iterable[tuple[int, int]]) -> "Graph":
        drop = {(min(u, v), max(u, v)) for u, v in removed}
        return Graph(self.n, [e for e in self._edges if e not in drop])

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self._edges == other._edges

    def __hash__(self):
        return hash((self.n, self._edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def _bit_indices(b: int) -> list[int]:
    out = []
    while b:
        low = b & -b
        out.append(low.bit_length() - 1)
        b ^= low
    return out


def build(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    return Graph(n, edges)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.n
    return Graph(g.n + h.n, list(g.edges) + [(u + shift, v + shift) for u, v in h.edges])


def girth(g: Graph):
    """Length of a shortest cycle, or ``INFINITE`` for a forest.

    Breadth-first search from every vertex; the first non-tree edge seen
    from root ``r`` closes a cycle through ``r`` of length
    ``dist[u] + dist[v] + 1``, and the minimum over all roots is exact.
    """
    best = INFINITE
    adj = g.adj
    for r in range(g.n):
        dist = {r: 0}
        parent = {r: -1}
        queue = deque([r])
        while queue:
            u = queue.popleft()
            du = dist[u]
            if best is not INFINITE and 2 * du + 1 >= best:
                break
            for w in adj[u]:
                if w == parent[u]:
                    continue
                if w in dist:
                    length = du + dist[w] + 1
                    if best is INFINITE or length < best:
                        best = length
                else:
                    dist[w] = du + 1
                    parent[w] = u
                    queue.append(w)
    return best


def bipartition(g: Graph) -> tuple[frozenset[int], frozenset[int]]:
    """Two-colour ``g``; the part containing vertex 0 comes first.

    Raises :class:`NotBipartite` carrying an odd cycle.
    """
    color = [-1] * g.n
    parent = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    parent[w] = u
                    queue.append(w)
                elif color[w] == color[u]:
                    raise NotBipartite(_odd_cycle(parent, u, w))
    a = frozenset(v for v in range(g.n) if color[v] == 0)
    b = frozenset(v for v in range(g.n) if color[v] == 1)
    return a, b


def _odd_cycle(parent: list[int], u: int, w: int) -> list[int]:
    # u, w are same-coloured neighbours: join their BFS-tree paths at the LCA
    pu = [u]
    while parent[pu[-1]] >= 0:
        pu.append(parent[pu[-1]])
    pw = [w]
    while parent[pw[-1]] >= 0:
        pw.append(parent[pw[-1]])
    on_pu = {v: i for i, v in enumerate(pu)}
    for j, v in enumerate(pw):
        if v in on_pu:
            return pu[: on_pu[v] + 1] + pw[:j][::-1]
    raise AssertionError("vertices in different trees")


def is_bipartite(g: Graph) -> bool:
    try:
        bipartition(g)
    except NotBipartite:
        return False
    return True


def is_regular(g: Graph, k: int) -> bool:
    return all(len(a) == k for a in g.adj)


def components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        out.append(sorted(comp))
    return out


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1
