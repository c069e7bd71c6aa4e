"""Edge connectivity, essential edge cuts and cyclic edge connectivity.

All three reduce to unit-capacity max-flow between two contracted vertex
sets. A cut separating two edges leaves both of them intact, so it is
essential; a cut separating two cycles is cyclic.

For connected cubic graphs a connected side ``A`` of an ``c``-edge cut is a
tree exactly when ``|A| = c - 2``. Cuts of size ``c`` found between two
connected ``(c-1)``-vertex sets are therefore cyclic, and every cyclic
``c``-cut separates two such sets, which gives an exact level-by-level
search. Other graphs fall back to pairs of vertex-disjoint cycles.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterator, Optional, Union

from .graph import INFINITE, Graph, components, girth, is_regular


class _Undefined:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "undefined"

    __str__ = __repr__


UNDEFINED = _Undefined()
"""Cyclic edge connectivity of graphs without two vertex-disjoint cycles."""


@dataclass(frozen=True)
class EdgeCut:
    edges: tuple[tuple[int, int], ...]
    side_a: frozenset[int]
    side_b: frozenset[int]

    def __len__(self):
        return len(self.edges)

    def __str__(self):
        return " ".join(f"{u}-{v}" for u, v in self.edges)


@dataclass(frozen=True)
class CutVerdict:
    value: bool
    witness: Optional[EdgeCut] = None

    def __bool__(self):
        return self.value


def _mask(vs) -> int:
    m = 0
    for v in vs:
        m |= 1 << v
    return m


def _members(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def min_cut(g: Graph, source: int, sink: int, limit: int) -> tuple[int, int]:
    """Max-flow between vertex bitmasks ``source`` and ``sink``.

    Stops once the flow reaches ``limit``. Returns ``(value, side)`` where
    ``side`` is the residual-reachable set from ``source`` (a min cut) or 0
    when the limit was hit.
    """
    adj = g.adj
    flow: dict[tuple[int, int], int] = {}
    value = 0
    starts = _members(source)
    while value < limit:
        parent = {s: -1 for s in starts}
        queue = deque(starts)
        hit = -1
        while queue and hit < 0:
            u = queue.popleft()
            for w in adj[u]:
                if w in parent or flow.get((u, w), 0) >= 1:
                    continue
                parent[w] = u
                if sink >> w & 1:
                    hit = w
                    break
                queue.append(w)
        if hit < 0:
            return value, _mask(parent)
        w = hit
        while parent[w] >= 0:
            u = parent[w]
            flow[(u, w)] = flow.get((u, w), 0) + 1
            flow[(w, u)] = flow.get((w, u), 0) - 1
            w = u
        value += 1
    return value, 0


def _cut_of(g: Graph, side: int) -> EdgeCut:
    edges = tuple((u, v) for u, v in g.edges if (side >> u & 1) != (side >> v & 1))
    a = frozenset(_members(side))
    return EdgeCut(edges, a, frozenset(range(g.n)) - a)


def edge_connectivity(g: Graph) -> int:
    if g.n <= 1 or len(components(g)) > 1:
        return 0
    best = min(g.degrees())
    for v in range(1, g.n):
        val, _ = min_cut(g, 1, 1 << v, best)
        best = min(best, val)
    return best


def min_essential_cut(g: Graph, limit: int) -> Optional[EdgeCut]:
    """A smallest essential edge cut of size below ``limit``, or None."""
    edges = g.edges
    best: Optional[EdgeCut] = None
    bound = limit
    for i, (a, b) in enumerate(edges):
        s = (1 << a) | (1 << b)
        for c, d in edges[i + 1:]:
            t = (1 << c) | (1 << d)
            if s & t:
                continue
            val, side = min_cut(g, s, t, bound)
            if val < bound:
                bound = val
                best = _cut_of(g, side)
                if bound == 0:
                    return best
    return best


def is_essentially_4_edge_connected(g: Graph) -> CutVerdict:
    """No edge cut of size < 4 leaves two components that both have an edge."""
    cut = min_essential_cut(g, 4)
    return CutVerdict(cut is None, cut)


def connected_sets(g: Graph, k: int) -> Iterator[int]:
    """Each connected k-vertex set once, as a bitmask (ESU enumeration)."""
    bits = g.nbr_bits
    if k <= 0:
        return

    def extend(sub, ext, v, size):
        if size == k:
            yield sub
            return
        while ext:
            low = ext & -ext
            w = low.bit_length() - 1
            ext ^= low
            # exclusive neighbours of w, beyond v
            excl = bits[w] & ~sub & ~_nbhd(sub) & ~((1 << (v + 1)) - 1)
            yield from extend(sub | low, ext | excl, v, size + 1)

    def _nbhd(sub):
        out = sub
        for u in _members(sub):
            out |= bits[u]
        return out

    for v in range(g.n):
        yield from extend(1 << v, bits[v] & ~((1 << (v + 1)) - 1), v, 1)


def _has_cycle(g: Graph, mask: int) -> bool:
    verts = _members(mask)
    e = sum(1 for u in verts for w in g.adj[u] if w > u and mask >> w & 1)
    comps = 0
    seen = 0
    for s in verts:
        if seen >> s & 1:
            continue
        comps += 1
        stack = [s]
        seen |= 1 << s
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if mask >> w & 1 and not seen >> w & 1:
                    seen |= 1 << w
                    stack.append(w)
    return e - len(verts) + comps > 0


def _component(g: Graph, mask: int, start: int) -> int:
    seen = 1 << start
    stack = [start]
    while stack:
        u = stack.pop()
        for w in g.adj[u]:
            if mask >> w & 1 and not seen >> w & 1:
                seen |= 1 << w
                stack.append(w)
    return seen


def _cyclic_witness(g: Graph, side: int, s: int, t: int) -> EdgeCut:
    full = (1 << g.n) - 1
    x = _component(g, side, (s & -s).bit_length() - 1)
    y = _component(g, full & ~x, (t & -t).bit_length() - 1)
    return _cut_of(g, y)


def _set_orbit_reps(sets: list[int], gens, n) -> list[int]:
    if not gens:
        return sets
    seen: set[int] = set()
    reps = []
    for s in sets:
        if s in seen:
            continue
        reps.append(s)
        stack = [s]
        seen.add(s)
        while stack:
            cur = stack.pop()
            for gen in gens:
                img = _mask(gen[v] for v in _members(cur))
                if img not in seen:
                    seen.add(img)
                    stack.append(img)
    return reps


def _cubic_cyclic(g: Graph):
    from .symmetry import search

    gens = search(g.adj).generators
    gir = girth(g)
    upper = gir if g.n >= 2 * gir else None
    top = upper - 1 if upper is not None else g.m
    for c in range(1, top + 1):
        k = max(c - 1, 1)
        sets = list(connected_sets(g, k))
        for s in _set_orbit_reps(sets, gens, g.n):
            for t in sets:
                if s & t:
                    continue
                val, side = min_cut(g, s, t, c + 1)
                if val <= c:
                    return val, _cyclic_witness(g, side, s, t)
    if upper is None:
        return UNDEFINED, None
    return upper, _girth_cycle_cut(g, gir)


def _girth_cycle_cut(g: Graph, gir: int) -> EdgeCut:
    for cyc in simple_cycles(g, gir):
        if len(cyc) == gir:
            return _cut_of(g, _mask(cyc))
    raise AssertionError("no girth cycle found")


def simple_cycles(g: Graph, max_len: Optional[int] = None) -> Iterator[tuple[int, ...]]:
    """Each cycle once, starting at its least vertex."""
    adj = g.adj
    limit = g.n if max_len is None else max_len

    for s in range(g.n):
        path = [s]
        on = 1 << s

        def rec():
            nonlocal on
            x = path[-1]
            for w in adj[x]:
                if w == s and len(path) >= 3 and path[1] < x:
                    yield tuple(path)
                elif w > s and not on >> w & 1 and len(path) < limit:
                    path.append(w)
                    on |= 1 << w
                    yield from rec()
                    on &= ~(1 << w)
                    path.pop()

        yield from rec()


def _cyclic_by_cycle_pairs(g: Graph):
    cycles = [_mask(c) for c in simple_cycles(g)]
    best = None
    witness = None
    for i, a in enumerate(cycles):
        for b in cycles[i + 1:]:
            if a & b:
                continue
            bound = best if best is not None else g.m + 1
            val, side = min_cut(g, a, b, bound)
            if val < bound:
                best = val
                witness = _cut_of(g, side)
    if best is None:
        return UNDEFINED, None
    return best, witness


def cyclic_edge_connectivity_with_witness(g: Graph) -> tuple[Union[int, _Undefined], Optional[EdgeCut]]:
    comps = components(g)
    if len(comps) > 1:
        cyclic = [c for c in comps if _has_cycle(g, _mask(c))]
        if len(cyclic) >= 2:
            side = _mask(cyclic[0])
            return 0, _cut_of(g, side)
        if not cyclic:
            return UNDEFINED, None
        keep = cyclic[0]
        index = {v: i for i, v in enumerate(keep)}
        sub = Graph(len(keep), [(index[u], index[v]) for u, v in g.edges if u in index])
        val, cut = cyclic_edge_connectivity_with_witness(sub)
        if cut is None:
            return val, None
        side = frozenset(keep[i] for i in cut.side_a)
        return val, _cut_of(g, _mask(side))
    if girth(g) is INFINITE:
        return UNDEFINED, None
    if is_regular(g, 3):
        return _cubic_cyclic(g)
    return _cyclic_by_cycle_pairs(g)


def cyclic_edge_connectivity(g: Graph):
    """Smallest edge cut leaving two components that both contain a cycle.

    Returns ``UNDEFINED`` when ``g`` has no two vertex-disjoint cycles.
    """
    return cyclic_edge_connectivity_with_witness(g)[0]
