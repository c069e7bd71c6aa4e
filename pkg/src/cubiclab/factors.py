"""Perfect matchings, 2-factors and the parity predicates built on them.

Two enumerators share no search code: :func:`enumerate_two_factors_direct`
grows vertex-disjoint cycles, while :func:`enumerate_two_factors_via_matchings`
enumerates perfect matchings and takes complements (cubic graphs only).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .graph import Graph, is_regular

Edge = tuple[int, int]
Matching = tuple[Edge, ...]


class NotCubicError(ValueError):
    pass


def _normalize_cycle(cyc: list[int]) -> tuple[int, ...]:
    i = cyc.index(min(cyc))
    rot = cyc[i:] + cyc[:i]
    if len(rot) > 2 and rot[-1] < rot[1]:
        rot = [rot[0]] + rot[:0:-1]
    return tuple(rot)


@dataclass(frozen=True)
class TwoFactor:
    """Vertex-disjoint cycles covering every vertex.

    Cycles are stored normalised (smallest vertex first, then its smaller
    neighbour) and sorted by first vertex, so equal edge sets compare equal.
    """

    cycles: tuple[tuple[int, ...], ...]

    @classmethod
    def from_cycles(cls, cycles: Iterable[Iterable[int]]) -> "TwoFactor":
        return cls(tuple(sorted(_normalize_cycle(list(c)) for c in cycles)))

    @property
    def edges(self) -> frozenset[Edge]:
        out = set()
        for c in self.cycles:
            for i, u in enumerate(c):
                v = c[(i + 1) % len(c)]
                out.add((min(u, v), max(u, v)))
        return frozenset(out)

    @property
    def structure(self) -> tuple[int, ...]:
        return cycle_structure(self)

    def __len__(self):
        return len(self.cycles)

    def __str__(self):
        return ",".join("-".join(map(str, c)) for c in self.cycles)


def cycle_structure(f: TwoFactor) -> tuple[int, ...]:
    return tuple(sorted(len(c) for c in f.cycles))


def parse_two_factor(text: str) -> TwoFactor:
    return TwoFactor.from_cycles([int(x) for x in part.split("-")] for part in text.split(","))


def enumerate_perfect_matchings(g: Graph) -> Iterator[Matching]:
    """Every perfect matching once, in lexicographic order of edge lists."""
    n = g.n
    if n % 2:
        return
    adj = g.adj
    covered = [False] * n
    chosen: list[Edge] = []

    def rec(u):
        while u < n and covered[u]:
            u += 1
        if u == n:
            yield tuple(chosen)
            return
        covered[u] = True
        for w in adj[u]:
            if not covered[w]:
                covered[w] = True
                chosen.append((u, w))
                yield from rec(u + 1)
                chosen.pop()
                covered[w] = False
        covered[u] = False

    yield from rec(0)


def complement_two_factor(g: Graph, m: Matching) -> TwoFactor:
    if not is_regular(g, 3):
        raise NotCubicError("complement of a perfect matching is a 2-factor only in cubic graphs")
    removed = {(min(u, v), max(u, v)) for u, v in m}
    if len(removed) * 2 != g.n or len({x for e in removed for x in e}) != g.n:
        raise ValueError("not a perfect matching")
    rest = [[w for w in g.adj[v] if (min(v, w), max(v, w)) not in removed] for v in range(g.n)]
    seen = [False] * g.n
    cycles = []
    for s in range(g.n):
        if seen[s]:
            continue
        cyc = [s]
        seen[s] = True
        prev, cur = s, rest[s][0]
        while cur != s:
            cyc.append(cur)
            seen[cur] = True
            a, b = rest[cur]
            prev, cur = cur, (b if a == prev else a)
        cycles.append(cyc)
    return TwoFactor.from_cycles(cycles)


def enumerate_two_factors_via_matchings(g: Graph) -> Iterator[TwoFactor]:
    for m in enumerate_perfect_matchings(g):
        yield complement_two_factor(g, m)


def enumerate_two_factors_direct(g: Graph) -> Iterator[TwoFactor]:
    """Spanning 2-regular subgraphs, grown cycle by cycle.

    Each cycle starts at the least uncovered vertex and is kept only in the
    orientation whose second vertex is smaller than its last, so every
    2-factor appears once. A branch dies as soon as some vertex outside the
    current path interior has fewer than two usable neighbours left.
    """
    n = g.n
    if n == 0:
        return
    bits = g.nbr_bits
    full = (1 << n) - 1

    def starved(free, verts):
        # free: vertices that can still receive edges
        while verts:
            low = verts & -verts
            w = low.bit_length() - 1
            verts ^= low
            if (bits[w] & free).bit_count() < 2:
                return True
        return False

    if starved(full, full):
        return
    cycles: list[list[int]] = []

    def grow(covered, path, inner):
        # path: open path starting at path[0]; inner: bitmask of path interior
        s, x = path[0], path[-1]
        free = full & ~covered & ~inner
        nb = bits[x] & free
        if len(path) >= 3 and bits[x] >> s & 1 and path[1] < x:
            cycles.append(path[:])
            cov = covered | (1 << s) | inner | (1 << x)
            if cov == full:
                yield TwoFactor.from_cycles(cycles)
            else:
                rest = full & ~cov
                if not starved(rest, rest):
                    s2 = (rest & -rest).bit_length() - 1
                    yield from grow(cov, [s2], 0)
            cycles.pop()
        nb &= ~(1 << s)
        while nb:
            low = nb & -nb
            y = low.bit_length() - 1
            nb ^= low
            if len(path) == 1:
                new_inner = inner
            else:
                new_inner = inner | (1 << x)
            path.append(y)
            free2 = full & ~covered & ~new_inner
            # vertices whose options shrank: neighbours of the new interior vertex
            # path endpoints need only one more edge, so they are not checked
            touched = (bits[x] & free2 & ~(1 << s) & ~low) if len(path) > 2 else 0
            if not starved(free2, touched):
                yield from grow(covered, path, new_inner)
            path.pop()

    yield from grow(0, [0], 0)


def count_two_factors(g: Graph, method: str = "direct") -> int:
    if method == "direct":
        it = enumerate_two_factors_direct(g)
    elif method == "matching":
        it = enumerate_two_factors_via_matchings(g)
    else:
        raise ValueError(f"unknown method {method!r}")
    return sum(1 for _ in it)


def count_perfect_matchings(g: Graph) -> int:
    return sum(1 for _ in enumerate_perfect_matchings(g))


def two_factor_structure_set(g: Graph) -> frozenset[tuple[int, ...]]:
    return frozenset(cycle_structure(f) for f in enumerate_two_factors_direct(g))


@dataclass(frozen=True)
class Verdict:
    """Predicate outcome; truthy iff the property holds.

    ``witness`` holds the first pair of 2-factors (or single 2-factor for
    2-factor hamiltonicity) showing failure. ``vacuous`` marks graphs
    without any 2-factor.
    """

    value: bool
    witness: Optional[tuple[TwoFactor, ...]] = None
    vacuous: bool = False

    def __bool__(self):
        return self.value


def _factors(g: Graph, method: str) -> Iterator[TwoFactor]:
    if method == "direct":
        return enumerate_two_factors_direct(g)
    if method == "matching":
        return enumerate_two_factors_via_matchings(g)
    raise ValueError(f"unknown method {method!r}")


def is_pseudo_2fi(g: Graph, method: str = "direct", early_exit: bool = True) -> Verdict:
    """Do all 2-factors have the same parity of cycle count?"""
    first = None
    conflict = None
    for f in _factors(g, method):
        if first is None:
            first = f
        elif conflict is None and len(f) % 2 != len(first) % 2:
            conflict = f
            if early_exit:
                break
    if first is None:
        return Verdict(True, vacuous=True)
    if conflict is not None:
        return Verdict(False, (first, conflict))
    return Verdict(True)


def is_2factor_hamiltonian(g: Graph, method: str = "direct") -> Verdict:
    any_found = False
    for f in _factors(g, method):
        any_found = True
        if len(f) != 1:
            return Verdict(False, (f,))
    return Verdict(True, vacuous=not any_found)
