"""graph6 and plain adjacency-list text formats.

The adjacency-list format is one line per vertex, ``v: a b c``, vertices
ascending from 0. graph6 follows the format description distributed with
nauty: a size field followed by the upper triangle of the adjacency matrix
in column order, six bits per printable byte.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator, TextIO

from .graph import Graph, GraphError


class Graph6Error(ValueError):
    pass


class Graph6LengthError(Graph6Error):
    """Size field or body length is inconsistent."""


class Graph6ByteError(Graph6Error):
    """A byte outside the printable range 63..126."""


class Graph6PaddingError(Graph6Error):
    """Nonzero bits in the padding of the final byte."""


class AdjListError(ValueError):
    pass


def _encode_size(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def encode_graph6(g: Graph) -> str:
    n = g.n
    bits = g.nbr_bits
    out = [_encode_size(n)]
    acc = 0
    k = 0
    for j in range(1, n):
        row = bits[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            k += 1
            if k == 6:
                out.append(chr(acc + 63))
                acc = 0
                k = 0
    if k:
        out.append(chr((acc << (6 - k)) + 63))
    return "".join(out)


def _decode_size(data: bytes) -> tuple[int, int]:
    if not data:
        raise Graph6LengthError("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise Graph6LengthError("truncated 8-byte size field")
        n = 0
        for c in data[2:8]:
            n = (n << 6) | (c - 63)
        return n, 8
    if len(data) < 4:
        raise Graph6LengthError("truncated 4-byte size field")
    n = 0
    for c in data[1:4]:
        n = (n << 6) | (c - 63)
    return n, 4


def decode_graph6(line: str | bytes) -> Graph:
    if isinstance(line, str):
        line = line.strip()
        if line.startswith(">>graph6<<"):
            line = line[10:]
        data = line.encode("ascii", errors="replace")
    else:
        data = line.strip()
    for pos, c in enumerate(data):
        if not 63 <= c <= 126:
            raise Graph6ByteError(f"byte {c!r} at position {pos} outside 63..126")
    n, off = _decode_size(data)
    nbits = n * (n - 1) // 2
    body = data[off:]
    if len(body) != (nbits + 5) // 6:
        raise Graph6LengthError(
            f"expected {(nbits + 5) // 6} data bytes for n={n}, got {len(body)}"
        )
    pad = len(body) * 6 - nbits
    if pad and (body[-1] - 63) & ((1 << pad) - 1):
        raise Graph6PaddingError("nonzero padding bits")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    for line in lines:
        line = line.strip()
        if line:
            yield decode_graph6(line)


_LINE = re.compile(r"^\s*(\d+)\s*:(.*)$")


def read_adjlist(text: str | Iterable[str]) -> Graph:
    """Parse ``v: a b c`` lines; whitespace and blank lines are free-form."""
    if isinstance(text, str):
        text = text.splitlines()
    rows: dict[int, list[int]] = {}
    for lineno, raw in enumerate(text, 1):
        if not raw.strip():
            continue
        match = _LINE.match(raw)
        if not match:
            raise AdjListError(f"line {lineno}: expected 'v: neighbours', got {raw!r}")
        v = int(match.group(1))
        if v in rows:
            raise AdjListError(f"line {lineno}: duplicate line for vertex {v}")
        try:
            rows[v] = [int(tok) for tok in match.group(2).split()]
        except ValueError as exc:
            raise AdjListError(f"line {lineno}: {exc}") from None
    n = len(rows)
    if sorted(rows) != list(range(n)):
        raise AdjListError("vertex lines must cover 0..n-1")
    for v, nbrs in rows.items():
        for w in nbrs:
            if not 0 <= w < n:
                raise AdjListError(f"vertex {v}: neighbour {w} out of range")
            if v not in rows[w]:
                raise AdjListError(f"asymmetric adjacency: {v} lists {w} but not vice versa")
    try:
        return Graph.from_adjacency([rows[v] for v in range(n)])
    except GraphError as exc:
        raise AdjListError(str(exc)) from None


def write_adjlist(g: Graph) -> str:
    return "".join(f"{v}:" + "".join(f" {w}" for w in g.adj[v]) + "\n" for v in range(g.n))


def write_graph6_stream(graphs: Iterable[Graph], out: TextIO) -> int:
    count = 0
    for g in graphs:
        out.write(encode_graph6(g) + "\n")
        count += 1
    return count
