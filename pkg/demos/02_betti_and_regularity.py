"""
Betti numbers and regularity
============================

Multigraded Betti numbers come from reduced homology of small simplicial
complexes attached to each lcm of generators.  Regularity is then the
largest j - i with beta_{i,j} nonzero.
"""

from monoreg import parse_ideal
from monoreg.betti import betti_table, lcm_lattice_betti, multigraded_betti, regularity
from monoreg.homology import SimplicialComplex, reduced_homology_dims

# A complete intersection of two squares: one syzygy in degree 4.
I = parse_ideal("x1^2, x2^2", 2)
print(betti_table(I).format())
print("reg =", regularity(I))

# The ideal of three lines through the origin has a linear resolution.
E = parse_ideal("x1*x2, x1*x3, x2*x3", 3)
print(betti_table(E).format())

# Multigraded entries, and the lcm-lattice computation of the same table.
for (i, a), b in sorted(multigraded_betti(E).multigraded.items()):
    print(f"beta_{i},{a} = {b}")
print("lcm lattice agrees:", lcm_lattice_betti(E).multigraded == multigraded_betti(E).multigraded)

# Pure powers: reg(x1^3, x2^3, x3^3) = 3*3 - 2 = 7.
print("reg(x1^3, x2^3, x3^3) =", regularity(parse_ideal("x1^3, x2^3, x3^3", 3)))

# Homology itself depends on the field: the projective plane has
# 2-torsion, visible over GF(2) but not over Q.
RP2 = [(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 5, 1),
       (1, 2, 4), (2, 3, 5), (3, 4, 1), (4, 5, 2), (5, 1, 3)]
C = SimplicialComplex.generated_by(6, RP2)
print("GF(2):", reduced_homology_dims(C, 2), " Q:", reduced_homology_dims(C, 0))
