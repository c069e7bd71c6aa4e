from __future__ import annotations

import random
from pathlib import Path

import pytest

from conftest import random_cubic, random_graph
from oracles import cycle_count_of, two_factors_by_edge_subsets, two_factors_of_cubic
from cubiclab.factors import (
    NotCubicError,
    TwoFactor,
    complement_two_factor,
    count_perfect_matchings,
    count_two_factors,
    enumerate_perfect_matchings,
    enumerate_two_factors_direct,
    enumerate_two_factors_via_matchings,
    is_2factor_hamiltonian,
    is_pseudo_2fi,
    parse_two_factor,
    two_factor_structure_set,
)
from cubiclab.graph import Graph

GOLDEN = Path(__file__).parent / "golden"


def edge_sets(factors):
    return {f.edges for f in factors}


def test_direct_matches_subset_oracle_on_random_graphs():
    rng = random.Random(7)
    for _ in range(150):
        g = random_graph(rng, rng.randint(3, 8), rng.choice([0.4, 0.6, 0.8]))
        want = two_factors_by_edge_subsets(g)
        got = list(enumerate_two_factors_direct(g))
        assert len(got) == len(want)
        assert edge_sets(got) == want


def test_both_enumerators_match_oracle_on_random_cubic_graphs():
    rng = random.Random(8)
    for _ in range(30):
        g = random_cubic(rng, rng.choice([4, 6, 8, 10, 12]))
        want = two_factors_of_cubic(g)
        direct = list(enumerate_two_factors_direct(g))
        via = list(enumerate_two_factors_via_matchings(g))
        assert edge_sets(direct) == edge_sets(via) == want
        assert len(direct) == len(via) == len(want)
        counts = {cycle_count_of(e, g.n) for e in want}
        assert {len(f) for f in direct} == counts


def test_factors_are_spanning_cycles(named_graphs):
    g = named_graphs["Pappus"]
    for f in enumerate_two_factors_direct(g):
        assert sorted(v for c in f.cycles for v in c) == list(range(g.n))
        assert all(g.has_edge(u, v) for u, v in f.edges)
        assert len(f.edges) == g.n


@pytest.mark.parametrize(
    "name, count, structures, ham, pseudo",
    [
        ("K33", 6, {(6,)}, True, True),
        ("Heawood", 24, {(14,)}, True, True),
        ("Pappus", 42, {(6, 6, 6), (18,)}, False, True),
        ("MoebiusKantor", 33, {(6, 10), (8, 8), (16,)}, False, False),
        ("CounterexampleG", 312, {(6, 6, 18), (6, 10, 14), (10, 10, 10), (30,)}, False, True),
    ],
)
def test_named_graph_values(named_graphs, name, count, structures, ham, pseudo):
    g = named_graphs[name]
    assert count_two_factors(g, "direct") == count_two_factors(g, "matching") == count
    assert count_perfect_matchings(g) == count
    assert two_factor_structure_set(g) == structures
    assert bool(is_2factor_hamiltonian(g)) is ham
    assert bool(is_pseudo_2fi(g)) is pseudo


def test_moebius_kantor_golden(named_graphs):
    rows = dict(
        line.split("\t", 1) for line in (GOLDEN / "moebius_kantor_pseudo.txt").read_text().splitlines()
        if line and not line.startswith("#")
    )
    g = named_graphs["MoebiusKantor"]
    v = is_pseudo_2fi(g)
    assert str(v.value).lower() == rows["value"]
    first, conflict = v.witness
    assert str(first) == rows["first"] and str(conflict) == rows["conflict"]
    assert len(first) % 2 != len(conflict) % 2
    assert str(count_two_factors(g)) == rows["two_factor_count"]
    got = ";".join("(" + ",".join(map(str, s)) + ")" for s in sorted(two_factor_structure_set(g)))
    assert got == rows["structures"]


def test_witness_method_independent(named_graphs):
    g = named_graphs["MoebiusKantor"]
    for method in ("direct", "matching"):
        v = is_pseudo_2fi(g, method)
        assert not v and len(v.witness) == 2
        assert len(v.witness[0]) % 2 != len(v.witness[1]) % 2
        h = is_2factor_hamiltonian(g, method)
        assert not h and len(h.witness[0]) > 1


def test_vacuous_graph():
    g = Graph(4, [(0, 1), (2, 3)])
    v = is_pseudo_2fi(g)
    assert v.value and v.vacuous
    assert is_2factor_hamiltonian(g).vacuous


def test_perfect_matchings_order_and_complement(named_graphs):
    g = named_graphs["K33"]
    ms = list(enumerate_perfect_matchings(g))
    assert ms == sorted(ms) and len(ms) == 6
    f = complement_two_factor(g, ms[0])
    assert f.edges == frozenset(set(g.edges) - set(ms[0]))


def test_complement_rejects_bad_input(named_graphs):
    with pytest.raises(NotCubicError):
        complement_two_factor(Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)]), ((0, 1), (2, 3)))
    with pytest.raises(ValueError):
        complement_two_factor(named_graphs["K33"], ((0, 3),))
    with pytest.raises(ValueError):
        count_two_factors(named_graphs["K33"], "guess")


def test_two_factor_text_round_trip():
    f = TwoFactor.from_cycles([[5, 4, 3], [2, 0, 1]])
    assert str(f) == "0-1-2,3-4-5"
    assert parse_two_factor(str(f)) == f
    assert f.structure == (3, 3)
