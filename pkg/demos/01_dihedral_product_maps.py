"""Three reversing maps over D6 x D10, one per choice of the edge involution.

Run with ``python3 demos/01_dihedral_product_maps.py``.
"""

from revmap import dihedral_product
from revmap.maps import MapKind, build_map, make_reversing_triple

L = dihedral_product(3, 5)
G = L.group
print(L, "with", len(G.generators), "generators on", G.degree, "points")

# The same unordered triple, with each involution taking a turn as z.
for words in [("u", "v", "abw"), ("u", "abw", "v"), ("v", "abw", "u")]:
    cmap = build_map(make_reversing_triple(G, *words), MapKind.REV)
    inv = cmap.invariants
    V, E, F = inv.counts
    print(f"{','.join(words):>10}: V={V:2} E={E} F={F:2} chi={inv.chi}  graph {inv.graph.label:<8}"
          f" orientable={inv.orientable}")

# chi = 3 + 5 - 15 in every case, and it is coprime to the 30 edges.
# The flag system is built from the group action; every object is an orbit of two partner maps.
fs = build_map(make_reversing_triple(G, "u", "v", "abw"), MapKind.REV).flags
print("flags:", len(fs), " vertex orbits:", fs.orbit_count((1, 2)), " face orbits:", fs.orbit_count((0, 1)))
