"""
The snub and orientability
==========================

The snub operator only uses even words, so on an orientable polyhedron it
produces two mirror-image copies.  On the hemicube it produces one.
"""

import numpy as np

from pmx import catalog as C
from pmx import premaniplex as P
from pmx import symmetry as S
from pmx import voltage as V

snub = C.snub()
for i, row in enumerate(snub.volt):
    print(f"color {i}:", " ".join(repr(w) for w in row))

cube = C.polyhedron("cube")
Z = V.apply(cube, snub)
comps = P.components(Z)
print("snub of the cube:", Z.vertex_count, "flags in", len(comps), "components")
left = P.induced(Z, comps[0])
print("one copy:", P.face_counts(left), "|Aut| =", S.automorphisms(left).order)
print("matches the snub cube from coordinates:", P.is_isomorphic(left, C.polyhedron("snub_cube")))

# A reflection of the cube swaps the two copies.
where = np.zeros(Z.vertex_count, dtype=int)
where[comps[1]] = 1
rho0 = S.distinguished_generators(cube)[0]
lifted = V.lift_automorphism(rho0, snub)
print("reflection swaps the copies:", bool(np.all(where[lifted] != where)))

hemi = C.hemicube()
print("snub of the hemicube connected:", P.is_connected(V.apply(hemi, snub)),
      "| predicted without building it:", V.is_product_connected(hemi, snub))
