"""
An antiprism from a voltage pyramid
===================================

The q-gonal pyramid is a 4-vertex graph with voltages in the dihedral
group D_q.  Pushing the medial operator through those voltages gives a
voltage graph for the medial of the pyramid, which is the antiprism.
"""

from pmx import catalog as C
from pmx import premaniplex as P
from pmx import symmetry as S
from pmx import voltage as V

for q in (3, 4, 5, 6):
    xp = C.pyramid_stg_voltage(q)
    th = V.theta_voltage(xp, C.medial())
    D = V.derived_graph(th)
    anti = C.antiprism_polyhedron(q)
    print(f"q={q}: {th.X.vertex_count} voltage vertices -> {D.vertex_count} flags, "
          f"antiprism? {P.is_isomorphic(D, anti)}, regular? {S.is_regular(D)}")

# For q = 3 the antiprism is the octahedron.
D = V.derived_graph(V.theta_voltage(C.pyramid_stg_voltage(3), C.medial()))
print("q=3 is the octahedron:", P.is_isomorphic(D, C.polyhedron("octahedron")))
