"""Acceptance suite: one group of tests per criterion.

A PASS/FAIL line per criterion is printed at the end of the pytest run
(see conftest.py).  Run alone with ``pytest tests/test_acceptance.py``.
"""

import itertools
import json

import numpy as np
import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from pmx import catalog as C
from pmx import io
from pmx import premaniplex as P
from pmx import racg
from pmx import symmetry as S
from pmx import voltage as V

import _corpus

criterion = pytest.mark.criterion
PROP = settings(
    max_examples=1000,
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)


def poly(name):
    return _corpus.sample(name)


# 1 -------------------------------------------------------------------------


def _commute_class(word):
    seen = {word}
    stack = [word]
    while stack:
        w = stack.pop()
        for p in range(len(w) - 1):
            if abs(w[p] - w[p + 1]) >= 2:
                u = w[:p] + (w[p + 1], w[p]) + w[p + 2 :]
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
    return frozenset(seen)


def _brute_force_normal_forms(rank, max_len):
    """Shortest, then lex-least, word reachable by commutations and deletions."""
    best = {}
    cls_of = {}

    def solve(word):
        if word in best:
            return best[word]
        cls = cls_of.get(word)
        if cls is None:
            cls = _commute_class(word)
            for u in cls:
                cls_of[u] = cls
        cand = min(cls)
        for u in cls:
            for p in range(len(u) - 1):
                if u[p] == u[p + 1]:
                    r = solve(u[:p] + u[p + 2 :])
                    if (len(r), r) < (len(cand), cand):
                        cand = r
        for u in cls:
            best[u] = cand
        return cand

    out = {}
    for L in range(max_len + 1):
        for w in itertools.product(range(rank), repeat=L):
            out[w] = solve(w)
    return out


@criterion(1, "word kernel oracle (rank <= 4, length <= 8)")
@pytest.mark.parametrize("rank", [1, 2, 3, 4])
def test_word_kernel_oracle(rank):
    oracle = _brute_force_normal_forms(rank, 8)
    mismatches = [w for w, nf in oracle.items() if racg.normalize(w, rank).letters != nf]
    assert not mismatches, mismatches[:5]
    # The partitions agree as well (implied, but cheap to state).
    ours = {}
    for w in oracle:
        ours.setdefault(racg.normalize(w, rank).letters, set()).add(w)
    theirs = {}
    for w, nf in oracle.items():
        theirs.setdefault(nf, set()).add(w)
    assert sorted(map(sorted, ours.values())) == sorted(map(sorted, theirs.values()))


# 2 -------------------------------------------------------------------------


@criterion(2, "medial of the cube is the cuboctahedron")
def test_medial_cube():
    M = V.apply(poly("cube"), C.medial())
    assert M.vertex_count == 96
    assert P.is_connected(M)
    assert P.face_counts(M) == (12, 24, 14)
    assert P.is_isomorphic(M, poly("cuboctahedron"))


# 3 -------------------------------------------------------------------------


@criterion(3, "truncation of the tetrahedron")
def test_truncation_tetrahedron():
    T = V.apply(poly("tetrahedron"), C.truncation())
    assert T.vertex_count == 72
    assert P.face_counts(T) == (12, 18, 8)
    assert P.is_isomorphic(T, poly("truncated_tetrahedron"))


# 4 -------------------------------------------------------------------------


@criterion(4, "composition theorem: medial twice is the rhombicuboctahedron")
def test_composition_medial_medial():
    cube, med = poly("cube"), C.medial()
    twice = V.apply(V.apply(cube, med), med)
    once = V.apply(cube, V.compose(med, med))
    oracle = poly("rhombicuboctahedron")
    assert twice.vertex_count == once.vertex_count == 192
    assert P.face_counts(once) == (24, 48, 26)
    assert P.is_isomorphic(twice, once)
    assert P.is_isomorphic(once, oracle)


# 5 -------------------------------------------------------------------------


@criterion(5, "pyramid, prism and trapezotope over polygons")
def test_pyramid_prism_trapezotope():
    square, triangle, cube = C.polygon(4), C.polygon(3), poly("cube")
    pyr = V.apply(square, C.pyramid(2))
    assert pyr.vertex_count == 32
    assert P.face_counts(pyr) == (5, 8, 5)
    pri = V.apply(square, C.prism(2))
    assert pri.vertex_count == 48
    assert P.is_isomorphic(pri, cube)
    assert P.is_isomorphic(V.apply(triangle, C.trapezotope(2)), cube)


# 6 -------------------------------------------------------------------------


@criterion(6, "antiprism pipeline: medial of the triangular pyramid via theta")
def test_antiprism_pipeline():
    xp = C.pyramid_stg_voltage(3)
    assert xp.X.vertex_count == 4
    assert not V.validate_fin(xp)
    D = V.derived_graph(V.theta_voltage(xp, C.medial()))
    assert D.vertex_count == 48
    assert P.is_maniplex(D)
    assert S.is_regular(D)
    assert P.is_isomorphic(D, poly("octahedron"))


# 7 -------------------------------------------------------------------------


@criterion(7, "mix with double covers")
def test_mix_double_covers():
    cube = poly("cube")
    two = C.two_orbit_premaniplex(3)
    m = V.mix(cube, two)
    comps = P.components(m)
    assert len(comps) == 2
    assert all(P.is_isomorphic(P.induced(m, c), cube) for c in comps)

    h = V.mix(poly("hemicube"), two)
    assert P.is_connected(h)
    assert P.is_isomorphic(h, cube)

    t = V.mix(C.polygon(3), C.polygon(4))
    comps = P.components(t)
    assert len(comps) == 2
    assert all(P.is_isomorphic(P.induced(t, c), C.polygon(12)) for c in comps)


# 8 -------------------------------------------------------------------------


@criterion(8, "snub of the cube: two chiral copies of the snub cube")
def test_snub_cube():
    cube, sn = poly("cube"), C.snub()
    assert all(racg.is_even(w) for row in sn.volt for w in row)
    X = V.apply(cube, sn)
    assert X.vertex_count == 480
    comps = P.components(X)
    assert len(comps) == 2
    where = np.empty(X.vertex_count, dtype=int)
    for k, c in enumerate(comps):
        where[c] = k
        part = P.induced(X, c)
        assert part.vertex_count == 240
        assert P.face_counts(part) == (24, 60, 38)
        assert S.automorphisms(part).order == 24
        assert P.is_isomorphic(part, poly("snub_cube"))
    reflection = S.distinguished_generators(cube)[0]
    lifted = V.lift_automorphism(reflection, sn)
    assert S.is_automorphism(X, lifted)
    assert np.all(where[lifted] == 1 - where)


# 9 -------------------------------------------------------------------------


def _ops_rank3():
    return [
        ("medial", C.medial()),
        ("truncation", C.truncation()),
        ("pyramid", C.pyramid(3)),
        ("k_bubble_0", C.k_bubble(3, 0)),
    ]


@criterion(9, "quotients commute with voltage operations")
@pytest.mark.parametrize("name,op", _ops_rank3(), ids=lambda v: v if isinstance(v, str) else "")
def test_quotient_commutation(name, op):
    cube = poly("cube")
    prod = V.apply(cube, op)
    for g in S.automorphisms(cube).elements:
        left = S.quotient(prod, [V.lift_automorphism(g, op)])
        right = V.apply(S.quotient(cube, [g]), op)
        assert P.is_isomorphic(left, right), name


# 10 ------------------------------------------------------------------------


@criterion(10, "symmetry type graphs")
def test_stg():
    T = S.symmetry_type_graph(V.apply(poly("cube"), C.medial()))
    assert T.vertex_count == 2
    links = [i for i in range(3) if T.adj[i, 0] == 1]
    assert links == [2]
    assert S.symmetry_type_graph(poly("cube")) == C.one_vertex_premaniplex(3)


# 11 ------------------------------------------------------------------------


@criterion(11, "hat-2 operator on the square and on the digon")
def test_hat2_square():
    sq = C.polygon(4)
    H = V.apply(sq, C.hat2_operator(sq))
    assert H.vertex_count == 128
    assert P.is_maniplex(H) and S.is_regular(H)
    assert P.is_isomorphic(H, C.torus_44(4))


@criterion(11, "hat-2 operator on the square and on the digon")
def test_hat2_digon():
    dg = C.polygon(2)
    H = V.apply(dg, C.hat2_operator(dg))
    assert H.vertex_count == 16
    assert P.face_counts(H) == (4, 4, 2)


# 12 ------------------------------------------------------------------------

pairs = st.sampled_from(_corpus.PAIRS)


@criterion(12, "property suites")
@PROP
@given(pairs)
def test_prop_product_is_premaniplex(pair):
    assert P.is_valid(_corpus.product(*pair))


@criterion(12, "property suites")
@PROP
@given(pairs)
def test_prop_vertex_count_multiplies(pair):
    rank, x, o = pair
    X, op = _corpus.premaniplex(rank, x), _corpus.operator(rank, o)
    Z = _corpus.product(*pair)
    assert Z.vertex_count == X.vertex_count * op.Y.vertex_count
    assert Z.rank == op.out_rank
    proj = V.fiber_projection(X, op)
    for i in range(Z.rank):
        assert np.array_equal(proj[Z.adj[i]], op.Y.adj[i][proj])


@criterion(12, "property suites")
@PROP
@given(pairs, st.integers(0, 10**6))
def test_prop_aut_embeds(pair, pick):
    rank, x, o = pair
    G = _corpus.aut(rank, x)
    if not G:
        return
    g = G[pick % len(G)]
    lifted = V.lift_automorphism(g, _corpus.operator(rank, o))
    assert S.is_automorphism(_corpus.product(*pair), lifted)


@criterion(12, "property suites")
@PROP
@given(pairs, st.integers(0, 10**6), st.lists(st.integers(0, 10), max_size=8))
def test_prop_lifted_walks_end_where_voltage_says(pair, start, steps):
    rank, x, o = pair
    X, op = _corpus.premaniplex(rank, x), _corpus.operator(rank, o)
    Z = _corpus.product(*pair)
    ny = op.Y.vertex_count
    v = start % Z.vertex_count
    x0, y0 = divmod(v, ny)
    colors = [s % op.out_rank for s in steps]
    for c in colors:
        v = int(Z.adj[c, v])
    w = V.walk_voltage(op, y0, colors)
    y = y0
    for c in colors:
        y = op.Y.neighbor(c, y)
    assert v == racg.act(w, X, x0) * ny + y


@criterion(12, "property suites")
@PROP
@given(pairs, st.integers(0, 2))
def test_prop_round_trip(pair, which):
    rank, x, o = pair
    obj = [_corpus.premaniplex(rank, x), _corpus.operator(rank, o), _corpus.product(*pair)][which]
    text = io.write_pmx(obj)
    back = io.parse_pmx(text)
    assert back == obj
    assert io.write_pmx(back) == text
    json.loads(text)


@criterion(12, "property suites")
@PROP
@given(pairs, st.integers(0, 10**6))
def test_prop_connectivity_predicate(pair, pick):
    rank, x, o = pair
    X, op = _corpus.premaniplex(rank, x), _corpus.operator(rank, o)
    if not (P.is_connected(X) and P.is_connected(op.Y)):
        return
    y0 = pick % op.Y.vertex_count
    assert V.is_product_connected(X, op, y0) == P.is_connected(_corpus.product(*pair))


# 13 ------------------------------------------------------------------------


@criterion(13, "negative controls")
def test_negative_controls():
    bad = V.VoltageOperator(C.one_vertex_premaniplex(3), [[(0, 1)], [(1,)], [(2,)]], 3)
    assert V.validate_operator(bad)
    with pytest.raises(V.InvalidOperator):
        V.check_operator(bad)
    assert not V.is_mixing(C.medial())
    med = C.medial()
    assert not V.swap_iso_check(med, V.mix_operator(med.Y))
