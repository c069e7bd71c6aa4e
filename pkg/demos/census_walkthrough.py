# Small census of cubic bipartite graphs, order by order.
#
# Run from the repository root:  python demos/census_walkthrough.py

from collections import Counter

from cubiclab import GenSpec, generate, girth, is_2factor_hamiltonian, is_pseudo_2fi
from cubiclab.connectivity import cyclic_edge_connectivity
from cubiclab.symmetry import automorphisms

# girth >= 6 starts at 14 vertices with the Heawood graph
for n in range(14, 21, 2):
    graphs = list(generate(GenSpec(n, min_girth=6)))
    print(f"n={n}: {len(graphs)} graphs")

# look closer at the 18-vertex ones
for g in generate(GenSpec(18, 6)):
    aut = automorphisms(g)
    print(
        f"  girth={girth(g)}  |Aut|={aut.group_size:4d}  orbits={len(aut.vertex_orbits)}"
        f"  cyclic_ec={cyclic_edge_connectivity(g)}"
        f"  pseudo2FI={bool(is_pseudo_2fi(g))}  2FH={bool(is_2factor_hamiltonian(g))}"
    )

# the girth-4 census is larger; tally cyclic connectivity at 16 vertices
tally = Counter(str(cyclic_edge_connectivity(g)) for g in generate(GenSpec(16, 4)))
print("n=16, girth>=4, cyclic edge-connectivity:", dict(sorted(tally.items())))
