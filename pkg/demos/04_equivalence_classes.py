"""Reversing triples of D18 up to automorphisms and the (x, y) swap.

Shows class sizes, the canonical form each class falls in, and a certificate
that carries an arbitrary member back to the class representative.
"""

from collections import Counter

from revmap import dihedral
from revmap.maps import MapKind, build_map
from revmap.triples import EquivalenceClass, equivalence_classes, match_canonical_form

G = dihedral(9).group
classes = equivalence_classes(G)
print(f"{sum(c.size for c in classes)} reversing triples in {len(classes)} classes")

shapes = Counter()
for cls in classes:
    tr = cls.representative_triple()
    inv = build_map(tr, MapKind.REV).invariants
    tag = match_canonical_form(G, tr)
    shapes[inv.counts] += 1
    print(f"{str(tr.words()):<22} size {cls.size:4}  form {tag.name} {tag.params}  Rev chi {inv.chi:3}"
          f"  coprime {inv.coprime}")

member = classes[-1].triples()[-1]
cert = classes[-1].certificate(member)
print("member", member, "-> representative", EquivalenceClass.apply(cert, member),
      "swap" if cert[1] else "no swap")
print("distinct (V, E, F) shapes:", dict(shapes))
