"""Euler characteristics of dihedral reversing maps as numpy tables.

For D_2n with x = h, y = g^i h, z = g^j h the Euler characteristic has a
closed form in gcds.  This script builds every map for one n, lays the values
out as an (i, j) grid and compares with the closed form.
"""

import math
import sys

import numpy as np

from revmap import dihedral
from revmap.maps import MapKind, ReversingTriple, build_map
from revmap.triples import dihedral_discriminants

n = int(sys.argv[1]) if len(sys.argv) > 1 else 9
G = dihedral(n).group
h = G.word("h")

built = np.full((n, n), np.nan)
closed = np.full((n, n), np.nan)
for i in range(1, n):
    for j in range(1, n):
        if math.gcd(math.gcd(i, j), n) != 1:
            continue
        tr = ReversingTriple(G, h, G.word(f"g{i}h"), G.word(f"g{j}h"))
        built[i, j] = build_map(tr, MapKind.REV).chi
        closed[i, j] = dihedral_discriminants(n, i, j).chi_rev

print(f"Rev Euler characteristics for n = {n} (rows i, columns j; '.' where gcd(i, j, n) > 1):")
for i in range(1, n):
    print(f"{i:3} " + " ".join(" ." if np.isnan(c) else f"{int(c):2}" for c in built[i, 1:]))
valid = ~np.isnan(built)
print("closed form agrees on", int(valid.sum()), "pairs:", bool((built[valid] == closed[valid]).all()))

coprime = [(i, j) for i in range(1, n) for j in range(1, n)
           if valid[i, j] and math.gcd(int(abs(built[i, j])), n) == 1]
print(f"{len(coprime)} pairs give chi coprime to the {n} edges, e.g. {coprime[:6]}")
