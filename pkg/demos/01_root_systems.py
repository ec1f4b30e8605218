"""Walk through building root systems and inspecting their structure.

Run:  python demos/01_root_systems.py
"""

from sl2bounds import (SimpleComponent, Weight, build, dominant_representative,
                       root_to_weight_coords, weyl_dimension, weyl_orbit)

# A root system is built from a list of simple components; the Cartan
# matrix, symmetrizers and full set of positive roots are derived.
g2 = build([SimpleComponent("G", 2)])
print("G2 Cartan matrix:", g2.cartan)
print("symmetrizers d_i:", g2.symmetrizers)
print("positive roots (root coordinates):")
for beta in g2.positive_roots:
    print("  ", beta, "-> weight coords", root_to_weight_coords(g2, beta))

# The highest root of G2 is 3a1 + 2a2, which equals the fundamental
# weight w2 -- the adjoint representation is L(0, 1).
print("dim L(0,1) =", weyl_dimension(g2, Weight((0, 1))), "(adjoint, 14)")
print("dim L(1,0) =", weyl_dimension(g2, Weight((1, 0))), "(the 7-dim rep)")

# Weyl orbits: a regular weight has orbit size equal to the group order.
print("|W(G2)| =", len(weyl_orbit(g2, Weight((1, 1)))))
print("dominant rep of (-1, -1):",
      dominant_representative(g2, Weight((-1, -1))).coords)

# Products of components work the same way.
a1a1 = build([SimpleComponent("A", 1), SimpleComponent("A", 1)])
print("A1 x A1 dim L(2,3) =", weyl_dimension(a1a1, Weight((2, 3))))
