"""
Wythoffian operations on the cube
=================================

Apply the medial, truncation and their compositions to the cube's flag
graph and compare with polyhedra built from coordinates.
"""

from pmx import catalog as C
from pmx import premaniplex as P
from pmx import voltage as V

cube = C.polyhedron("cube")
print("cube:", cube.vertex_count, "flags, faces", P.face_counts(cube))

# Each operator is a small premaniplex with words on its darts.
ops = {
    "medial": (C.medial(), "cuboctahedron"),
    "truncation": (C.truncation(), "truncated_cube"),
    "truncation of the dual": (C.trunc_dual(), "truncated_octahedron"),
    "medial twice": (C.wythoff_02(), "rhombicuboctahedron"),
    "omnitruncation": (C.omnitruncation(3), "great_rhombicuboctahedron"),
}
for label, (op, oracle) in ops.items():
    Z = V.apply(cube, op)
    same = P.is_isomorphic(Z, C.polyhedron(oracle))
    print(f"{label:>24}: {Z.vertex_count:4d} flags {P.face_counts(Z)}  = {oracle}? {same}")

# Composing first and applying once gives the same thing as applying twice.
mt = V.compose(C.medial(), C.truncation())
print("medial then truncation, as one operator:", mt.Y.vertex_count, "vertices")
print("isomorphic to two steps:",
      P.is_isomorphic(V.apply(cube, mt), V.apply(V.apply(cube, C.medial()), C.truncation())))
