import numpy as np
import pytest

from pmx import catalog as C
from pmx import premaniplex as P
from pmx.premaniplex import InvalidPremaniplex, MapSpec, Premaniplex


def test_construction_checks_permutations():
    with pytest.raises(InvalidPremaniplex, match="color 0"):
        Premaniplex([[1, 1], [0, 1]])
    with pytest.raises(InvalidPremaniplex, match="out of range"):
        Premaniplex([[0, 2]])
    with pytest.raises(InvalidPremaniplex):
        Premaniplex([])
    with pytest.raises(InvalidPremaniplex, match="label"):
        Premaniplex([[0, 1]], labels=["a"])


def test_adjacency_is_read_only():
    X = C.polygon(3)
    with pytest.raises(ValueError):
        X.adj[0, 0] = 1


def test_validate_reports_involution_then_commuting():
    # color 0 is a 3-cycle
    X = Premaniplex([[1, 2, 0], [0, 1, 2]])
    v = P.validate(X)
    assert v[0].kind == "involution" and v[0].colors == (0,)
    assert P.is_valid(Premaniplex([[1, 0, 3, 2], [0, 1, 2, 3], [3, 2, 1, 0]]))
    # colors 0 and 2 alternate along a path instead of closing a square
    W = Premaniplex([[1, 0, 3, 2], [0, 1, 2, 3], [2, 1, 0, 3]])
    bad = P.validate(W)
    assert bad and all(b.kind == "commuting" and b.colors == (0, 2) for b in bad)
    with pytest.raises(InvalidPremaniplex, match="commuting"):
        P.check(W)


def test_components_and_sections():
    cube = C.polyhedron("cube")
    assert P.is_connected(cube)
    assert P.face_counts(cube) == (8, 12, 6)
    assert len(P.components(cube, [0, 1])) == 6
    sec = P.restrict_section(cube, 0, 3)
    assert sec.rank == 2 and len(P.components(sec)) == 8
    with pytest.raises(ValueError):
        P.restrict_section(cube, 1, 2)
    two = P.disjoint_union(cube, C.polyhedron("tetrahedron"))
    assert [len(c) for c in P.components(two)] == [48, 24]
    root = P.component_of(two, 50)
    assert root.premaniplex.vertex_count == 24 and root.vertices[0] == 50
    assert P.is_isomorphic(root.premaniplex, C.polyhedron("tetrahedron"))
    with pytest.raises(ValueError):
        P.induced(two, [0, 1, 2])


def test_maniplex_predicate():
    assert P.is_maniplex(C.polyhedron("octahedron"))
    assert not P.is_maniplex(C.one_vertex_premaniplex(3))
    assert not P.is_maniplex(C.two_orbit_premaniplex(3))  # parallel links
    assert not P.is_maniplex(P.disjoint_union(C.polygon(3), C.polygon(3)))


def test_isomorphism_search():
    cube = C.polyhedron("cube")
    rng = np.random.default_rng(7)
    perm = rng.permutation(cube.vertex_count)
    Y = P.relabel(cube, perm)
    f = P.find_isomorphism(cube, Y)
    assert f is not None
    for i in range(3):
        assert np.array_equal(np.asarray(f)[cube.adj[i]], Y.adj[i][f])
    assert P.find_isomorphism(cube, Y, seed=(0, int(perm[0]))) is not None
    assert not P.is_isomorphic(cube, C.polyhedron("octahedron"))
    assert not P.is_isomorphic(C.prism_polyhedron(4), C.antiprism_polyhedron(3))
    assert not P.is_isomorphic(cube, C.polygon(3))


def test_disconnected_isomorphism_matches_components():
    a = P.disjoint_union(C.polygon(3), C.polygon(4))
    b = P.disjoint_union(C.polygon(4), C.polygon(3))
    assert P.is_isomorphic(a, b)
    c = P.disjoint_union(C.polygon(5), C.polygon(2))
    assert not P.is_isomorphic(a, c)


def test_covers():
    assert P.covers(C.polyhedron("cube"), C.two_orbit_premaniplex(3))
    assert not P.covers(C.hemicube(), C.two_orbit_premaniplex(3))
    assert P.covers(C.polyhedron("cube"), C.one_vertex_premaniplex(3))
    assert P.covers(C.polygon(6), C.polygon(3))
    assert not P.covers(C.polygon(4), C.polygon(3))


def test_map_validation():
    with pytest.raises(InvalidPremaniplex, match="simple cycle"):
        P.flag_graph_from_map(MapSpec(3, [(0, 1, 1)]))
    with pytest.raises(InvalidPremaniplex, match="face sides"):
        P.flag_graph_from_map(MapSpec(3, [(0, 1, 2)]))
    with pytest.raises(InvalidPremaniplex, match="vertex ids"):
        P.flag_graph_from_map(MapSpec(4, [(0, 1, 2), (0, 2, 1)]))


def test_flag_graph_of_a_theta_map():
    # the triangle as a map on the sphere: two triangular faces
    X = P.flag_graph_from_map(MapSpec(3, [(0, 1, 2), (0, 2, 1)]))
    assert X.vertex_count == 12
    assert P.is_maniplex(X)
    assert P.face_counts(X) == (3, 3, 2)
    assert X.labels[0].startswith("v0:e0-1:f0")
    assert len(MapSpec(3, [(0, 1, 2), (0, 2, 1)]).edges) == 3
