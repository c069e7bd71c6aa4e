"""Isomorph-free generation of connected cubic bipartite graphs.

A cubic bipartite graph on ``2m`` vertices is the incidence (Levi) graph of
a configuration: ``m`` points, ``m`` lines, three points per line and three
lines per point. Girth >= 6 means two lines share at most one point, girth
>= 8 additionally forbids triangles of lines.

Configurations are grown one line at a time by canonical augmentation. A
child is accepted only when its new line lies in the automorphism orbit of
the line a fixed canonical rule would delete; sibling duplicates are avoided
by augmenting with one line per orbit of the parent's group. At the leaves
the point/line duality is factored out, so each graph is emitted once.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterator, Optional

from .graph import Graph
from .symmetry import search

VALID_GIRTHS = (4, 6, 8)


@dataclass(frozen=True)
class GenSpec:
    n: int
    min_girth: int = 6
    emit: Optional[Callable[[Graph], None]] = field(default=None, compare=False)

    def __post_init__(self):
        if self.n < 6 or self.n % 2:
            raise ValueError(f"n must be even and >= 6, got {self.n}")
        if self.min_girth not in VALID_GIRTHS:
            raise ValueError(f"min_girth must be one of {VALID_GIRTHS}, got {self.min_girth}")

    @property
    def m(self) -> int:
        return self.n // 2


@dataclass(frozen=True)
class WorkUnit:
    """Subtree of the generation tree rooted at a partial configuration."""

    spec: GenSpec
    depth: int
    index: int
    lines: tuple[tuple[int, int, int], ...]


class _Partial:
    """Points ``0..m-1`` with some lines; point degrees at most 3."""

    __slots__ = ("m", "girth", "lines", "deg", "col")

    def __init__(self, m, girth, lines=()):
        self.m = m
        self.girth = girth
        self.lines = list(lines)
        self.deg = [0] * m
        self.col = [0] * m  # collinearity bitmasks
        for t in self.lines:
            self._touch(t)

    def _touch(self, t):
        a, b, c = t
        for p in t:
            self.deg[p] += 1
        self.col[a] |= (1 << b) | (1 << c)
        self.col[b] |= (1 << a) | (1 << c)
        self.col[c] |= (1 << a) | (1 << b)

    def child(self, t):
        q = _Partial.__new__(_Partial)
        q.m = self.m
        q.girth = self.girth
        q.lines = self.lines + [t]
        q.deg = self.deg[:]
        q.col = self.col[:]
        q._touch(t)
        return q

    def near(self, p):
        """Points a new line through ``p`` may not contain."""
        c = self.col[p]
        if self.girth >= 8:
            extra = 0
            while c:
                low = c & -c
                extra |= self.col[low.bit_length() - 1]
                c ^= low
            c = self.col[p] | extra
        return c | (1 << p)

    def feasible(self):
        remaining = self.m - len(self.lines)
        open_mask = 0
        for p, d in enumerate(self.deg):
            if 3 - d > remaining:
                return False
            if d < 3:
                open_mask |= 1 << p
        if self.girth < 6:
            return True
        for p, d in enumerate(self.deg):
            if d < 3 and bin(open_mask & ~self.near(p)).count("1") < 2 * (3 - d):
                return False
        return True

    def candidates(self):
        m = self.m
        used = [p for p in range(m) if 0 < self.deg[p] < 3]
        isolated = [p for p in range(m) if self.deg[p] == 0]
        out = []
        for j in range(4):
            if j > len(isolated):
                break
            fresh = isolated[:j]
            for base in combinations(used, 3 - j):
                t = tuple(sorted(base + tuple(fresh)))
                if self._admissible(t):
                    out.append(t)
        return out

    def _admissible(self, t):
        if self.girth < 6:
            return True
        a, b, c = t
        na = self.near(a)
        if na >> b & 1 or na >> c & 1:
            return False
        return not (self.near(b) >> c & 1)

    def levi(self):
        """Incidence graph on non-isolated points then lines, with colours."""
        pts = [p for p in range(self.m) if self.deg[p]]
        index = {p: i for i, p in enumerate(pts)}
        k = len(pts)
        adj = [[] for _ in range(k + len(self.lines))]
        for j, t in enumerate(self.lines):
            for p in t:
                adj[index[p]].append(k + j)
                adj[k + j].append(index[p])
        colors = [0] * k + [1] * len(self.lines)
        return adj, colors, pts


def _line_key(part, t):
    return tuple(sorted(part.deg[p] for p in t))


def _point_perm(gen, pts, m):
    perm = list(range(m))
    k = len(pts)
    for i, p in enumerate(pts):
        perm[p] = pts[gen[i]] if gen[i] < k else p
    return perm


def _children(part: _Partial):
    """Accepted children of ``part`` in a deterministic order."""
    if len(part.lines) == part.m:
        return
    adj, colors, pts = part.levi()
    res = search(adj, colors)
    perms = [_point_perm(g, pts, part.m) for g in res.generators]
    cands = part.candidates()
    reps = _orbit_reps(cands, perms, part)
    for t in reps:
        ch = part.child(t)
        if not ch.feasible():
            continue
        keys = [_line_key(ch, s) for s in ch.lines]
        top = max(keys)
        if keys[-1] != top:
            continue
        if keys.count(top) > 1:
            cadj, ccol, cpts = ch.levi()
            cres = search(cadj, ccol)
            k = len(cpts)
            # least canonical position among lines with the top key
            pos = {v: i for i, v in enumerate(cres.lab)}
            star = min((pos[k + j], k + j) for j in range(len(ch.lines)) if keys[j] == top)[1]
            if cres.orbits[star] != cres.orbits[k + len(ch.lines) - 1]:
                continue
        yield ch


def _orbit_reps(cands, perms, part):
    if not perms:
        return cands
    isolated = [p for p in range(part.m) if part.deg[p] == 0]

    def image(t, perm):
        img = [perm[p] for p in t]
        j = sum(1 for p in img if part.deg[p] == 0)
        img = [p for p in img if part.deg[p]] + isolated[:j]
        return tuple(sorted(img))

    index = {t: i for i, t in enumerate(cands)}
    parent = list(range(len(cands)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for t, i in index.items():
        for perm in perms:
            j = index.get(image(t, perm))
            if j is None:
                continue
            a, b = find(i), find(j)
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [t for i, t in enumerate(cands) if find(i) == i]


def _connected(part: _Partial) -> bool:
    m = part.m
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= part.col[low.bit_length() - 1]
            f ^= low
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << m) - 1


def _finish(part: _Partial) -> Optional[Graph]:
    """Emit the Levi graph if connected and this orientation is canonical."""
    if not _connected(part):
        return None
    m = part.m
    adj = [[] for _ in range(2 * m)]
    for j, t in enumerate(part.lines):
        for p in t:
            adj[p].append(m + j)
            adj[m + j].append(p)
    res = search(adj)
    # accept iff the canonically first vertex's orbit meets the point side
    r = res.orbits[res.lab[0]]
    if not any(res.orbits[p] == r for p in range(m)):
        return None
    rows = res.rows
    return Graph(2 * m, [(i, j) for i in range(2 * m) for j in range(i + 1, 2 * m) if rows[i] >> j & 1])


def _walk(part: _Partial) -> Iterator[Graph]:
    if len(part.lines) == part.m:
        g = _finish(part)
        if g is not None:
            yield g
        return
    for ch in _children(part):
        yield from _walk(ch)


def _root(spec: GenSpec) -> _Partial:
    return _Partial(spec.m, spec.min_girth)


def generate(spec: GenSpec) -> Iterator[Graph]:
    """All connected cubic bipartite graphs of order ``spec.n`` and girth
    at least ``spec.min_girth``, one per isomorphism class, canonically
    labelled."""
    for g in _walk(_root(spec)):
        if spec.emit is not None:
            spec.emit(g)
        yield g


def count(spec: GenSpec) -> int:
    return sum(1 for _ in generate(spec))


def split_work(spec: GenSpec, depth: int) -> list[WorkUnit]:
    """Generation-tree nodes at ``depth`` lines (or leaves above it)."""
    if depth < 0:
        raise ValueError("depth must be >= 0")
    depth = min(depth, spec.m)
    level = [_root(spec)]
    for _ in range(depth):
        nxt = []
        for part in level:
            nxt.extend(_children(part))
        level = nxt
    return [WorkUnit(spec, depth, i, tuple(p.lines)) for i, p in enumerate(level)]


def generate_unit(unit: WorkUnit) -> Iterator[Graph]:
    part = _Partial(unit.spec.m, unit.spec.min_girth, unit.lines)
    yield from _walk(part)


def units_for(spec: GenSpec, parts: int, min_per_part: int = 4) -> list[WorkUnit]:
    """Split at the shallowest depth giving ``min_per_part`` units per worker."""
    depth = 0
    units = split_work(spec, 0)
    while len(units) < parts * min_per_part and depth < spec.m:
        depth += 1
        units = split_work(spec, depth)
    return units


def generate_split(spec: GenSpec, k: int, parts: int) -> Iterator[Graph]:
    """The ``k``-th of ``parts`` disjoint shares of :func:`generate`."""
    if not 0 <= k < parts:
        raise ValueError(f"split index {k} not in 0..{parts - 1}")
    for unit in units_for(spec, parts)[k::parts]:
        yield from generate_unit(unit)
