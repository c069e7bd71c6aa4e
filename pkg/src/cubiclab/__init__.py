"""Exhaustive search tools for cubic bipartite graphs and their 2-factors."""

from .codec import decode_graph6, encode_graph6, read_adjlist, write_adjlist
from .constructions import counterexample, heawood, in_family, k33, named, pappus, star_decompose, star_product
from .factors import (
    TwoFactor,
    count_two_factors,
    enumerate_perfect_matchings,
    enumerate_two_factors_direct,
    enumerate_two_factors_via_matchings,
    is_2factor_hamiltonian,
    is_pseudo_2fi,
    two_factor_structure_set,
)
from .generator import GenSpec, count, generate
from .graph import INFINITE, Graph, bipartition, girth, is_connected, is_regular
from .symmetry import automorphisms, canonical_form, is_vertex_transitive

__version__ = "0.1.0"
