"""Regular maps whose group is the order-24 member of the S4-cover family.

Enumerates commuting (y, z) triples up to equivalence and prints each map
together with its dual.  Two counts of parallel edges are shown: the true
count of edges between adjacent vertices, and the order of the vertex
stabilizer meeting its conjugate by z.  For regular maps the second is twice
the first, since every edge stabilizer has order four.
"""

from revmap import s4_cover
from revmap.maps import MapKind, build_map, make_reversing_triple
from revmap.triples import verify_corollary_regular

G = s4_cover(3).group
for f in verify_corollary_regular(G):
    if "triple" not in f:
        print("row", f["row"], "->", f["reason"])
        continue
    cmap = build_map(make_reversing_triple(G, *f["triple"]), MapKind.REG)
    g = cmap.invariants.graph
    print(f"{','.join(f['triple']):>12}  V,E,F={tuple(f['counts'])}  chi={f['chi']:2}"
          f"  orientable={str(f['orientable']):5}  graph {f['graph']:<7} dual {f['dualGraph']:<7}"
          f"  parallel edges {g.multiplicity}, stabilizer intersection {g.coset_multiplicity}")

# (v, vh, hhw) is the tetrahedron: six edges on four vertices, so its graph is a simple K4.
