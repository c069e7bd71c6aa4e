# Star products: gluing cubic graphs along a vertex and taking them apart again.
#
# Run from the repository root:  python demos/star_products.py

from cubiclab import heawood, is_2factor_hamiltonian, is_pseudo_2fi, k33, pappus, star_decompose, star_product
from cubiclab.constructions import conjecture_basis, in_family
from cubiclab.symmetry import certificate

h = star_product(k33(), heawood(), 0, 0)
print("K33 * Heawood:", h, "2FH:", bool(is_2factor_hamiltonian(h)))

# a second product with Pappus keeps the cycle-count parity but not hamiltonicity
hp = star_product(h, pappus(), 5, 0)
print("... * Pappus:", hp, "pseudo 2FI:", bool(is_pseudo_2fi(hp)), "2FH:", bool(is_2factor_hamiltonian(hp)))

# decomposition cuts along the least essential 3-edge cut
d = star_decompose(hp)
print("cut edges:", d.cut, "pieces:", d.g1.n, "+", d.g2.n, "vertices")
names = {certificate(k33()): "K33", certificate(heawood()): "Heawood", certificate(pappus()): "Pappus"}
for piece in (d.g1, d.g2):
    print("  piece:", names.get(certificate(piece), f"{piece.n}-vertex product"))

print("in 2FH family:", in_family(hp, conjecture_basis("2fh")))
print("in pseudo family:", in_family(hp, conjecture_basis("pseudo")))
