"""Canonical labelling and automorphism groups by individualisation-refinement.

The search follows the usual nauty scheme: refine an ordered partition to
an equitable one, individualise a vertex of the first smallest non-singleton
cell, recurse. Leaves are compared by ``(trace sequence, relabelled rows)``;
the least leaf gives the canonical labelling. Automorphisms found along the
way prune children that lie in a known orbit, and the stabiliser chain along
the first path yields the exact group order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .codec import encode_graph6
from .graph import Graph


@dataclass(frozen=True)
class CanonicalForm:
    relabeling: tuple[int, ...]
    """``relabeling[v]`` is the canonical index of input vertex ``v``."""
    certificate: str


@dataclass(frozen=True)
class AutomorphismInfo:
    group_size: int
    vertex_orbits: tuple[tuple[int, ...], ...]
    generators: tuple[tuple[int, ...], ...] = ()


@dataclass
class SearchResult:
    """Raw output of :func:`search` (positions are canonical indices)."""

    lab: list[int]
    """``lab[i]`` is the input vertex placed at canonical position ``i``."""
    rows: tuple[int, ...]
    """Neighbour bitmasks of the canonically relabelled graph."""
    generators: list[list[int]]
    group_size: int
    orbits: list[int]
    """Orbit representative (least vertex) for each vertex."""


def _refine(adj, lab, cstart, cend, queue, trace):
    """Refine to the coarsest equitable partition below the current one.

    ``lab``/``cstart``/``cend`` are updated in place. Every decision depends
    only on positions and neighbour counts, so the result is equivariant.
    Returns the number of new cells created.
    """
    n = len(lab)
    inq = [False] * n
    for s in queue:
        inq[s] = True
    count = [0] * n
    created = 0
    qi = 0
    while qi < len(queue):
        s = queue[qi]
        qi += 1
        inq[s] = False
        touched = []
        for p in range(s, cend[s]):
            for x in adj[lab[p]]:
                if not count[x]:
                    touched.append(x)
                count[x] += 1
        for cs in sorted({cstart[x] for x in touched}):
            ce = cend[cs]
            if ce - cs == 1:
                continue
            members = lab[cs:ce]
            members.sort(key=count.__getitem__)
            lo = count[members[0]]
            if lo == count[members[-1]]:
                continue
            lab[cs:ce] = members
            frags = []
            p = cs
            while p < ce:
                c = count[lab[p]]
                q = p + 1
                while q < ce and count[lab[q]] == c:
                    q += 1
                frags.append((p, q, c))
                p = q
            trace.append(cs)
            for p, q, c in frags:
                cend[p] = q
                for i in range(p, q):
                    cstart[lab[i]] = p
                trace.append(q - p)
                trace.append(c)
            created += len(frags) - 1
            if inq[cs]:
                for p, q, c in frags[1:]:
                    queue.append(p)
                    inq[p] = True
            else:
                big = max(frags, key=lambda f: f[1] - f[0])
                for f in frags:
                    if f is not big:
                        queue.append(f[0])
                        inq[f[0]] = True
        for x in touched:
            count[x] = 0
    return created


def _initial_partition(n, colors):
    if colors is None:
        lab = list(range(n))
        keys = [0] * n
    else:
        keys = list(colors)
        lab = sorted(range(n), key=lambda v: (keys[v], v))
    cstart = [0] * n
    cend = [0] * n
    starts = []
    p = 0
    while p < n:
        q = p + 1
        while q < n and keys[lab[q]] == keys[lab[p]]:
            q += 1
        starts.append(p)
        cend[p] = q
        for i in range(p, q):
            cstart[lab[i]] = p
        p = q
    return lab, cstart, cend, starts


def _find(parent, v):
    while parent[v] != v:
        parent[v] = parent[parent[v]]
        v = parent[v]
    return v


def _orbits(n, gens):
    parent = list(range(n))
    for g in gens:
        for v in range(n):
            a = _find(parent, v)
            b = _find(parent, g[v])
            if a != b:
                if a < b:
                    parent[b] = a
                else:
                    parent[a] = b
    return [_find(parent, v) for v in range(n)]


def search(adj: Sequence[Sequence[int]], colors: Sequence | None = None) -> SearchResult:
    """Canonical labelling plus automorphism data for an adjacency list.

    ``colors`` (optional) gives each vertex a sortable colour; cells of the
    initial partition are ordered by colour, so only colour-preserving maps
    count as isomorphisms and certificates depend on the colouring.
    """
    n = len(adj)
    if n == 0:
        return SearchResult([], (), [], 1, [])
    lab, cstart, cend, starts = _initial_partition(n, colors)
    root_trace: list[int] = []
    ncells = len(starts) + _refine(adj, lab, cstart, cend, list(starts), root_trace)

    gens: list[list[int]] = []
    first: dict = {}
    best: dict = {}

    def leaf_rows(lab_):
        pos = [0] * n
        for i, v in enumerate(lab_):
            pos[v] = i
        rows = []
        for v in lab_:
            r = 0
            for w in adj[v]:
                r |= 1 << pos[w]
            rows.append(r)
        return tuple(rows)

    def fixing(prefix):
        return [g for g in gens if all(g[v] == v for v in prefix)]

    def dfs(lab_, cstart_, cend_, ncells_, path, traces):
        # returns the level to unwind to, or None to continue normally
        level = len(path)
        if ncells_ == n:
            rows = leaf_rows(lab_)
            if not first:
                first.update(lab=lab_, rows=rows, traces=traces, path=path)
                best.update(lab=lab_, rows=rows, traces=traces)
                return None
            if traces == first["traces"] and rows == first["rows"]:
                gens.append(_compose_auto(first["lab"], lab_))
                fp = first["path"]
                k = 0
                while k < len(fp) and k < len(path) and fp[k] == path[k]:
                    k += 1
                return k
            if traces == best["traces"] and rows == best["rows"]:
                gens.append(_compose_auto(best["lab"], lab_))
                return None
            if (traces, rows) < (best["traces"], best["rows"]):
                best.update(lab=lab_, rows=rows, traces=traces)
            return None

        # first smallest non-singleton cell
        tgt = -1
        size = n + 1
        p = 0
        while p < n:
            e = cend_[p]
            if 1 < e - p < size:
                tgt, size = p, e - p
                if size == 2:
                    break
            p = e
        cell = sorted(lab_[tgt:tgt + size])

        explored: list[int] = []
        seen_gens = -1
        orb = None
        for v in cell:
            if explored:
                if len(gens) != seen_gens:
                    seen_gens = len(gens)
                    orb = _orbits(n, fixing(path))
                rv = orb[v]
                if any(orb[u] == rv for u in explored):
                    continue
            explored.append(v)
            lab2 = lab_[:]
            cstart2 = cstart_[:]
            cend2 = cend_[:]
            pv = lab2.index(v, tgt, tgt + size)
            lab2[pv], lab2[tgt] = lab2[tgt], lab2[pv]
            cend2[tgt] = tgt + 1
            cend2[tgt + 1] = tgt + size
            for i in range(tgt + 1, tgt + size):
                cstart2[lab2[i]] = tgt + 1
            cstart2[v] = tgt
            t: list[int] = [tgt]
            nc = ncells_ + 1 + _refine(adj, lab2, cstart2, cend2, [tgt], t)
            child_traces = traces + [tuple(t)]
            if first:
                on_first = child_traces == first["traces"][: level + 1]
                if not on_first and child_traces > best["traces"][: level + 1]:
                    continue
            jump = dfs(lab2, cstart2, cend2, nc, path + [v], child_traces)
            if jump is not None and jump < level:
                return jump
        return None

    dfs(lab, cstart, cend, ncells, [], [])

    fp = first["path"]
    size = 1
    for d in range(len(fp)):
        orb = _orbits(n, fixing(fp[:d]))
        r = orb[fp[d]]
        size *= sum(1 for v in range(n) if orb[v] == r)
    return SearchResult(best["lab"], best["rows"], gens, size, _orbits(n, gens))


def _compose_auto(lab_a, lab_b):
    # vertex at position i in leaf a maps to vertex at position i in leaf b
    perm = [0] * len(lab_a)
    for a, b in zip(lab_a, lab_b):
        perm[a] = b
    return perm


def _rows_graph(rows: Sequence[int]) -> Graph:
    n = len(rows)
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rows[i] >> j & 1])


def canonical_form(g: Graph, colors: Sequence | None = None) -> CanonicalForm:
    res = search(g.adj, colors)
    relabel = [0] * g.n
    for i, v in enumerate(res.lab):
        relabel[v] = i
    cert = encode_graph6(_rows_graph(res.rows))
    if colors is not None:
        # colour classes in canonical order; without it a recoloured graph collides
        cert += "|" + ",".join(str(colors[v]) for v in res.lab)
    return CanonicalForm(tuple(relabel), cert)


def certificate(g: Graph, colors: Sequence | None = None) -> str:
    return canonical_form(g, colors).certificate


def canonical_graph(g: Graph) -> Graph:
    """``g`` relabelled into canonical order."""
    return _rows_graph(search(g.adj).rows)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return search(g.adj).rows == search(h.adj).rows


def automorphisms(g: Graph, colors: Sequence | None = None) -> AutomorphismInfo:
    res = search(g.adj, colors)
    classes: dict[int, list[int]] = {}
    for v, r in enumerate(res.orbits):
        classes.setdefault(r, []).append(v)
    return AutomorphismInfo(
        res.group_size,
        tuple(tuple(c) for c in sorted(classes.values())),
        tuple(tuple(p) for p in res.generators),
    )


def is_vertex_transitive(g: Graph) -> bool:
    return len(automorphisms(g).vertex_orbits) <= 1
