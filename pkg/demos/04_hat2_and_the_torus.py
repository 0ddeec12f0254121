"""
The hat-2 construction
======================

For a regular M with m facets the operator lives on Z_2^m.  On the square
it yields the toroidal map {4,4}_(4,0).
"""

from pmx import catalog as C
from pmx import premaniplex as P
from pmx import symmetry as S
from pmx import voltage as V

for name, M in [("digon", C.polygon(2)), ("triangle", C.polygon(3)), ("square", C.polygon(4))]:
    op = C.hat2_operator(M)
    Z = V.apply(M, op)
    print(f"{name:>8}: operator on {op.Y.vertex_count} vertices, result {Z.vertex_count} flags,"
          f" faces {P.face_counts(Z)}, regular {S.is_regular(Z)}")

sq = C.polygon(4)
print("square gives {4,4}_(4,0):", P.is_isomorphic(V.apply(sq, C.hat2_operator(sq)), C.torus_44(4)))
print("triangle gives the octahedron:",
      P.is_isomorphic(V.apply(C.polygon(3), C.hat2_operator(C.polygon(3))), C.polyhedron("octahedron")))
