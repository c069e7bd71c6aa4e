from __future__ import annotations

import io

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cubiclab.codec import (
    AdjListError,
    Graph6ByteError,
    Graph6LengthError,
    Graph6PaddingError,
    decode_graph6,
    encode_graph6,
    read_adjlist,
    read_graph6_lines,
    write_adjlist,
    write_graph6_stream,
)
from cubiclab.constructions import COUNTEREXAMPLE_ADJLIST
from cubiclab.graph import Graph, girth, is_regular


@st.composite
def graphs(draw, max_n=70):
    n = draw(st.integers(0, max_n))
    pairs = [(i, j) for j in range(n) for i in range(j)]
    if not pairs:
        return Graph(n)
    picks = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=min(len(pairs), 120)))
    return Graph(n, picks)


@given(graphs())
@settings(max_examples=300, deadline=None)
def test_graph6_round_trip(g):
    text = encode_graph6(g)
    assert all(63 <= ord(c) <= 126 for c in text)
    assert decode_graph6(text) == g


@given(graphs(max_n=12))
@settings(max_examples=200, deadline=None)
def test_adjlist_round_trip(g):
    assert read_adjlist(write_adjlist(g)) == g


@pytest.mark.parametrize(
    "text, n, m",
    [("?", 0, 0), ("@", 1, 0), ("A_", 2, 1), ("Bw", 3, 3), ("C~", 4, 6)],
)
def test_known_graph6_strings(text, n, m):
    g = decode_graph6(text)
    assert (g.n, g.m) == (n, m)
    assert encode_graph6(g) == text


def test_petersen_string():
    g = decode_graph6("IheA@GUAo")
    assert g.n == 10 and is_regular(g, 3) and girth(g) == 5


def test_header_and_long_size_field():
    assert decode_graph6(">>graph6<<Bw").m == 3
    g = Graph(63, [(0, 62)])
    text = encode_graph6(g)
    assert text.startswith("~??~")
    assert decode_graph6(text) == g


@pytest.mark.parametrize(
    "text, exc",
    [("", Graph6LengthError), ("Bww", Graph6LengthError), ("B", Graph6LengthError),
     ("B\x7f", Graph6ByteError), ("B x", Graph6ByteError), ("A`", Graph6PaddingError)],
)
def test_graph6_errors(text, exc):
    with pytest.raises(exc):
        decode_graph6(text)


def test_graph6_stream():
    buf = io.StringIO()
    assert write_graph6_stream([Graph(3, [(0, 1)]), Graph(2)], buf) == 2
    got = list(read_graph6_lines(io.StringIO(buf.getvalue() + "\n")))
    assert got == [Graph(3, [(0, 1)]), Graph(2)]


def test_adjlist_counterexample_text():
    g = read_adjlist(COUNTEREXAMPLE_ADJLIST)
    assert g.n == 30 and is_regular(g, 3)
    assert write_adjlist(g) == COUNTEREXAMPLE_ADJLIST


def test_adjlist_tolerates_spacing():
    assert read_adjlist("  0 :1\n\n1:   0  \n") == Graph(2, [(0, 1)])
    assert write_adjlist(Graph(2)) == "0:\n1:\n"


@pytest.mark.parametrize(
    "text",
    [
        "0: 1\n1:\n",          # asymmetric
        "0: 1\n0: 1\n1: 0\n",  # duplicate vertex line
        "0: 2\n1:\n",          # neighbour out of range
        "1: 2\n2: 1\n",        # does not start at 0
        "0 1 2\n",             # not a v: line
        "0: x\n",              # bad token
        "0: 0\n",              # loop
        "0: 1 1\n1: 0 0\n",    # repeated neighbour
    ],
)
def test_adjlist_errors(text):
    with pytest.raises(AdjListError):
        read_adjlist(text)
