# The 30-vertex graph: its 2-factors, symmetry and cuts.
#
# Run from the repository root:  python demos/counterexample_tour.py

from collections import Counter

from cubiclab import counterexample, enumerate_two_factors_direct, is_pseudo_2fi
from cubiclab.analysis import verify_counterexample
from cubiclab.connectivity import cyclic_edge_connectivity_with_witness
from cubiclab.constructions import conjecture_basis, in_family
from cubiclab.symmetry import automorphisms

g = counterexample()
print(g)

# every 2-factor, grouped by cycle lengths
shapes = Counter(f.structure for f in enumerate_two_factors_direct(g))
for shape, k in sorted(shapes.items()):
    print(f"{shape}: {k} two-factors, {len(shape)} cycles")

# cycle counts are 3 or 1: always odd
print("pseudo 2-factor isomorphic:", bool(is_pseudo_2fi(g)))

info = automorphisms(g)
print("|Aut| =", info.group_size, "vertex orbits:", [len(o) for o in info.vertex_orbits])

value, cut = cyclic_edge_connectivity_with_witness(g)
print("cyclic edge-connectivity", value, "via", cut)

print("built from K33/Heawood/Pappus by star products:", in_family(g, conjecture_basis("pseudo")))

for check in verify_counterexample(g):
    print("PASS" if check.passed else "FAIL", check.name)
