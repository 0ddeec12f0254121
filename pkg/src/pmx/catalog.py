"""Named voltage operators and sample premaniplexes.

Operators are built from explicit dart data.  Sample polyhedra are built
from vertex coordinates through their convex hull, so they are independent
of the operators and can serve as oracles for them.
"""

from __future__ import annotations

import itertools
from enum import Enum

import numpy as np

from .premaniplex import MapSpec, Premaniplex, _bfs_order, flag_graph_from_map, components
from .racg import GroupWord
from .symmetry import automorphisms, distinguished_generators, quotient
from .voltage import VoltageOperator, check_operator, compose, mix_operator, substitute_voltages


class OperatorName(str, Enum):
    identity = "identity"
    dual = "dual"
    petrial = "petrial"
    d_op = "d_op"
    section = "section"
    medial = "medial"
    truncation = "truncation"
    trunc_dual = "trunc_dual"
    wythoff_02 = "wythoff_02"
    omnitruncation = "omnitruncation"
    snub = "snub"
    pyramid = "pyramid"
    prism = "prism"
    trapezotope = "trapezotope"
    k_bubble = "k_bubble"
    mix_with = "mix_with"
    two_orbit = "two_orbit"
    hat2 = "hat2"


# ---------------------------------------------------------------------------
# Small premaniplexes
# ---------------------------------------------------------------------------


def one_vertex_premaniplex(n):
    return Premaniplex([[0]] * n)


def two_orbit_premaniplex(n, I=()):
    """Two vertices; semiedges for colors in I, links for the others."""
    I = set(I)
    if not I <= set(range(n)):
        raise ValueError(f"colors {sorted(I)} out of range for rank {n}")
    return Premaniplex([[0, 1] if i in I else [1, 0] for i in range(n)])


def _operator(adj, volt, in_rank):
    return check_operator(VoltageOperator(Premaniplex(adj), volt, in_rank))


# ---------------------------------------------------------------------------
# One-vertex operators
# ---------------------------------------------------------------------------


def one_vertex_operator(n, words):
    """(1^m, [w_0, ..., w_{m-1}]) with each w_i a rank-n word."""
    words = list(words)
    return _operator([[0]] * len(words), [[w] for w in words], n)


def identity_operator(n):
    return one_vertex_operator(n, [(i,) for i in range(n)])


def dual(n):
    return one_vertex_operator(n, [(n - 1 - i,) for i in range(n)])


def petrial(n):
    if n < 3:
        raise ValueError("the Petrial needs rank at least 3")
    words = [(i,) for i in range(n)]
    words[n - 3] = (n - 3, n - 1)
    return one_vertex_operator(n, words)


def section(n, k, l):
    """Components of X ⋊ this are the (k, l)-sections of X."""
    if not (-1 <= k < l <= n) or l - k - 1 < 1:
        raise ValueError(f"bad section bounds k={k}, l={l} for rank {n}")
    return one_vertex_operator(n, [(i,) for i in range(k + 1, l)])


# ---------------------------------------------------------------------------
# Rank-3 Wythoffians and the snub
# ---------------------------------------------------------------------------


def medial():
    # a = 0, b = 1
    adj = [[0, 1], [0, 1], [1, 0]]
    volt = [[(1,), (1,)], [(0,), (2,)], [(), ()]]
    return _operator(adj, volt, 3)


def truncation():
    # a = 0, b = 1, c = 2
    adj = [[0, 1, 2], [1, 0, 2], [0, 2, 1]]
    volt = [[(0,), (1,), (1,)], [(), (), (2,)], [(2,), (), ()]]
    return _operator(adj, volt, 3)


def trunc_dual():
    return compose(dual(3), truncation())


def wythoff_02():
    return compose(medial(), medial())


def snub():
    """The snub as a 10-vertex (3,3)-operator.

    The vertices are the ten flags around a vertex of the snub, in cyclic
    order: 2k is (edge k, face before it) and 2k+1 is (edge k, face after
    it), so colors 2 and 1 alternate around a 10-cycle.  The five edges at a
    snub vertex lead to the neighbours r0r1, r1r0, r0r2, r1r2 and r2r1 of the
    underlying flag; color 0 crosses those edges and carries that word.
    """
    adj = [
        [3, 2, 1, 0, 5, 4, 9, 8, 7, 6],
        [9, 2, 1, 4, 3, 6, 5, 8, 7, 0],
        [1, 0, 3, 2, 5, 4, 7, 6, 9, 8],
    ]
    r01, r10, r02, r12, r21 = (0, 1), (1, 0), (0, 2), (1, 2), (2, 1)
    volt = [
        [r01, r01, r10, r10, r02, r02, r12, r12, r21, r21],
        [()] * 10,
        [()] * 10,
    ]
    return _operator(adj, volt, 3)


def omnitruncation(n):
    """Recolored flag graph of the (n-1)-simplex with color-0 semiedges.

    Vertices are the orderings of 0..n-1; color c >= 1 swaps positions c-1
    and c, and the color-0 semiedge at an ordering starting with j carries r_j.
    """
    if n < 1:
        raise ValueError("rank must be positive")
    perms = list(itertools.permutations(range(n)))
    index = {p: k for k, p in enumerate(perms)}
    adj = [list(range(len(perms)))]
    for c in range(1, n):
        row = []
        for p in perms:
            q = list(p)
            q[c - 1], q[c] = q[c], q[c - 1]
            row.append(index[tuple(q)])
        adj.append(row)
    volt = [[(p[0],) for p in perms]] + [[()] * len(perms) for _ in range(1, n)]
    return _operator(adj, volt, n)


# ---------------------------------------------------------------------------
# Pyramid, prism, trapezotope, k-bubble
# ---------------------------------------------------------------------------


def _layer_voltage(i, t):
    if i < t:
        return (i,)
    if i in (t, t + 1):
        return ()
    return (i - 1,)


def pyramid(n):
    """(n, n+1)-operator on layers t = -1..n (vertex t+1)."""
    if n < 1:
        raise ValueError("rank must be positive")
    ts = range(-1, n + 1)
    adj, volt = [], []
    for i in range(n + 1):
        row, vrow = [], []
        for t in ts:
            if i == t:
                u = t - 1
            elif i == t + 1:
                u = t + 1
            else:
                u = t
            row.append(u + 1)
            vrow.append(_layer_voltage(i, t))
        adj.append(row)
        volt.append(vrow)
    return _operator(adj, volt, n)


def prism(n):
    """(n, n+1)-operator on (t, lam), t = 0..n, lam in {0, 1} (vertex 2t+lam)."""
    if n < 1:
        raise ValueError("rank must be positive")
    adj, volt = [], []
    for i in range(n + 1):
        row, vrow = [], []
        for t in range(n + 1):
            for lam in (0, 1):
                if i == t == 0:
                    u = (0, 1 - lam)
                elif i == t:
                    u = (t - 1, lam)
                elif i == t + 1:
                    u = (t + 1, lam)
                else:
                    u = (t, lam)
                row.append(2 * u[0] + u[1])
                vrow.append(_layer_voltage(i, t))
        adj.append(row)
        volt.append(vrow)
    return _operator(adj, volt, n)


def trapezotope(n):
    """(n, n+1)-operator on Z_2^{n+1}; vertex v has bit k equal to v_k.

    v_k records whether the step from rank k to rank k+1 of the flag
    (a chain of pairs (F, G)) moves F down (0) or G up (1).  Color 0 flips
    v_0; color i >= 1 looks at v_{i-1}, v_i: if they differ it swaps them,
    otherwise it is a semiedge carrying r_j with j the rank of the face of
    the original flag that the i-face change moves.
    """
    if n < 1:
        raise ValueError("rank must be positive")
    size = 2 ** (n + 1)
    adj = [[v ^ 1 for v in range(size)]]
    volt = [[()] * size]
    for i in range(1, n + 1):
        row, vrow = [], []
        for v in range(size):
            bits = [(v >> k) & 1 for k in range(n + 1)]
            a, b = bits[i - 1], bits[i]
            if a != b:
                row.append(v ^ (1 << (i - 1)) ^ (1 << i))
                vrow.append(())
                continue
            base = bits.count(0) - 1
            done = bits[:i]
            if a == 0:
                j = base - done.count(0)
            else:
                j = base + done.count(1)
            row.append(v)
            vrow.append((j,))
        adj.append(row)
        volt.append(vrow)
    return _operator(adj, volt, n)


def k_bubble(n, k):
    """(n, n)-operator on l = k+1..n (vertex l-k-1).

    Links l -- l+1 have color l and trivial voltage.  At l the semiedge of
    color i carries r_i for i < k, r_{i+1} for k <= i <= l-2, r_k for
    i = k = l-1 and r_i for i > l.
    """
    if not 0 <= k <= n - 2:
        raise ValueError(f"k-bubble needs 0 <= k <= n-2, got k={k}, n={n}")
    ls = list(range(k + 1, n + 1))
    adj = [[0] * len(ls) for _ in range(n)]
    volt = [[()] * len(ls) for _ in range(n)]
    for pos, l in enumerate(ls):
        for i in range(n):
            if i == l - 1 and l - 1 >= k + 1:
                adj[i][pos] = pos - 1
            elif i == l:
                adj[i][pos] = pos + 1
            else:
                adj[i][pos] = pos
                volt[i][pos] = (i + 1,) if k <= i <= l - 2 else (i,)
    return _operator(adj, volt, n)


# ---------------------------------------------------------------------------
# The hat-2 operator of a regular premaniplex
# ---------------------------------------------------------------------------


def facet_labels(M, base=0):
    """Facet index of every flag; facets numbered in BFS order from ``base``."""
    comps = components(M, range(M.rank - 1))
    which = np.empty(M.vertex_count, dtype=np.int64)
    for c, comp in enumerate(comps):
        which[comp] = c
    relabel = {}
    for v in _bfs_order(M, base):
        relabel.setdefault(int(which[v]), len(relabel))
    return np.array([relabel[int(c)] for c in which])


def hat2_operator(M, base=0):
    """(n, n+1)-operator on Z_2^m, m the number of facets of a regular M.

    Bit k of a vertex is the coordinate of the k-th facet; facet 0 holds
    the base flag.  Color i < n permutes coordinates by the distinguished
    generator rho_i and carries r_i; color n flips bit 0.
    """
    n = M.rank
    rho = distinguished_generators(M, base)
    facet = facet_labels(M, base)
    m = int(facet.max()) + 1
    if m > 20:
        raise ValueError(f"{m} facets give too large an operator")
    # facet k is sent to facet fperm[k] by rho_i
    fperms = []
    for g in rho:
        fp = np.empty(m, dtype=np.int64)
        fp[facet] = facet[g]
        fperms.append(fp)
    size = 2**m
    adj, volt = [], []
    for i in range(n):
        fp = fperms[i]
        row = []
        for v in range(size):
            w = 0
            for k in range(m):
                if (v >> k) & 1:
                    w |= 1 << int(fp[k])
            row.append(w)
        adj.append(row)
        volt.append([(i,)] * size)
    adj.append([v ^ 1 for v in range(size)])
    volt.append([()] * size)
    return _operator(adj, volt, n)


# ---------------------------------------------------------------------------
# Dispatcher
# ---------------------------------------------------------------------------

RANK3_ONLY = {"medial", "truncation", "trunc_dual", "wythoff_02", "snub"}


def classical_operator(name, rank=None, param=None):
    """Look up an operator by name.

    ``rank`` is the input rank where it is free; ``param`` is k for the
    k-bubble, the word list for d_op, (k, l) for section, the premaniplex
    for mix_with and hat2, and the color set for two_orbit.
    """
    name = OperatorName(name).value
    if name in RANK3_ONLY:
        if rank not in (None, 3):
            raise ValueError(f"{name} is only defined for rank 3")
        return {
            "medial": medial,
            "truncation": truncation,
            "trunc_dual": trunc_dual,
            "wythoff_02": wythoff_02,
            "snub": snub,
        }[name]()
    if name in ("mix_with", "hat2"):
        if param is None:
            raise ValueError(f"{name} needs a premaniplex parameter")
        return mix_operator(param) if name == "mix_with" else hat2_operator(param)
    n = 3 if rank is None else int(rank)
    if n < 1:
        raise ValueError("rank must be positive")
    if name == "identity":
        return identity_operator(n)
    if name == "dual":
        return dual(n)
    if name == "petrial":
        return petrial(n)
    if name == "d_op":
        return one_vertex_operator(n, param)
    if name == "section":
        k, l = (-1, n) if param is None else param
        return section(n, k, l)
    if name == "omnitruncation":
        return omnitruncation(n)
    if name == "pyramid":
        return pyramid(n)
    if name == "prism":
        return prism(n)
    if name == "trapezotope":
        return trapezotope(n)
    if name == "k_bubble":
        return k_bubble(n, 0 if param is None else int(param))
    if name == "two_orbit":
        return mix_operator(two_orbit_premaniplex(n, () if param is None else param))
    raise AssertionError(name)


# ---------------------------------------------------------------------------
# Sample premaniplexes
# ---------------------------------------------------------------------------


def polygon(p):
    """Flag graph of the p-gon: a 2p-cycle alternating colors 0 and 1."""
    if p < 1:
        raise ValueError("polygon needs p >= 1")
    N = 2 * p
    adj0 = [v ^ 1 for v in range(N)]
    adj1 = [((v + 1) % N if v % 2 else (v - 1) % N) for v in range(N)]
    return Premaniplex([adj0, adj1])


def simplex_flag(n):
    """Flag graph of the (n-1)-simplex: orderings of 0..n-1, color i swaps i, i+1."""
    if n < 2:
        raise ValueError("simplex_flag needs n >= 2")
    perms = list(itertools.permutations(range(n)))
    index = {p: k for k, p in enumerate(perms)}
    adj = []
    for i in range(n - 1):
        row = []
        for p in perms:
            q = list(p)
            q[i], q[i + 1] = q[i + 1], q[i]
            row.append(index[tuple(q)])
        adj.append(row)
    return Premaniplex(adj)


def map_from_points(points, decimals=6):
    """MapSpec of the convex hull of ``points`` (all must be hull vertices)."""
    from scipy.spatial import ConvexHull

    pts = np.asarray(points, dtype=float)
    hull = ConvexHull(pts)
    if len(hull.vertices) != len(pts):
        raise ValueError("every point must be a vertex of the hull")
    planes = {}
    for simplex, eq in zip(hull.simplices, hull.equations):
        key = tuple(np.round(eq, decimals) + 0.0)
        planes.setdefault(key, set()).update(int(v) for v in simplex)
    faces = []
    for key in sorted(planes):
        verts = sorted(planes[key])
        normal = np.array(key[:3])
        c = pts[verts].mean(axis=0)
        u = pts[verts[0]] - c
        u /= np.linalg.norm(u)
        w = np.cross(normal, u)
        ang = [np.arctan2((pts[v] - c) @ w, (pts[v] - c) @ u) for v in verts]
        faces.append(tuple(v for _, v in sorted(zip(ang, verts))))
    return MapSpec(len(pts), tuple(faces))


def _perms(vec, signs="all", parity=None):
    out = set()
    for perm in itertools.permutations(range(3)):
        even = _perm_parity(perm) == 0
        if parity == "even" and not even:
            continue
        if parity == "odd" and even:
            continue
        base = [vec[perm[k]] for k in range(3)]
        for sgn in itertools.product((1, -1), repeat=3):
            if signs != "all" and not signs(sgn):
                continue
            out.add(tuple(round(s * b, 12) + 0.0 for s, b in zip(sgn, base)))
    return sorted(out)


def _perm_parity(p):
    inv = sum(1 for a in range(3) for b in range(a + 1, 3) if p[a] > p[b])
    return inv % 2


def _cyclic(vec, signs="all"):
    out = set()
    for shift in range(3):
        base = vec[shift:] + vec[:shift]
        for sgn in itertools.product((1, -1), repeat=3):
            if signs != "all" and not signs(sgn):
                continue
            out.add(tuple(round(s * b, 12) + 0.0 for s, b in zip(sgn, base)))
    return sorted(out)


PHI = (1 + 5**0.5) / 2
_TRIB = (1 + (19 + 3 * 33**0.5) ** (1 / 3) + (19 - 3 * 33**0.5) ** (1 / 3)) / 3


def polyhedron_points(name):
    r2 = 2**0.5
    even_minus = lambda s: s.count(-1) % 2 == 0  # noqa: E731
    if name == "tetrahedron":
        return [(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)]
    if name == "cube":
        return list(itertools.product((1, -1), repeat=3))
    if name == "octahedron":
        return _perms((1, 0, 0))
    if name == "icosahedron":
        return _cyclic([0, 1, PHI])
    if name == "dodecahedron":
        return list(itertools.product((1, -1), repeat=3)) + _cyclic([0, 1 / PHI, PHI])
    if name == "cuboctahedron":
        return _perms((1, 1, 0))
    if name == "truncated_tetrahedron":
        return _perms((3, 1, 1), signs=even_minus)
    if name == "truncated_cube":
        return _perms((r2 - 1, 1, 1))
    if name == "truncated_octahedron":
        return _perms((0, 1, 2))
    if name == "rhombicuboctahedron":
        return _perms((1, 1, 1 + r2))
    if name == "great_rhombicuboctahedron":
        return _perms((1, 1 + r2, 1 + 2 * r2))
    if name == "snub_cube":
        t = _TRIB
        even_plus = lambda s: s.count(1) % 2 == 0  # noqa: E731
        odd_plus = lambda s: s.count(1) % 2 == 1  # noqa: E731
        return _perms((1, 1 / t, t), signs=even_plus, parity="even") + _perms(
            (1, 1 / t, t), signs=odd_plus, parity="odd"
        )
    raise KeyError(name)


def _ring(q, z=0.0, phase=0.0):
    return [(np.cos(2 * np.pi * k / q + phase), np.sin(2 * np.pi * k / q + phase), z) for k in range(q)]


POLYHEDRA = (
    "tetrahedron",
    "cube",
    "octahedron",
    "dodecahedron",
    "icosahedron",
    "cuboctahedron",
    "truncated_tetrahedron",
    "truncated_cube",
    "truncated_octahedron",
    "rhombicuboctahedron",
    "great_rhombicuboctahedron",
    "snub_cube",
)


def polyhedron(name):
    return flag_graph_from_map(map_from_points(polyhedron_points(name)))


def pyramid_polyhedron(q):
    return flag_graph_from_map(map_from_points(_ring(q) + [(0.0, 0.0, 1.0)]))


def prism_polyhedron(q):
    return flag_graph_from_map(map_from_points(_ring(q, -0.5) + _ring(q, 0.5)))


def antiprism_polyhedron(q):
    return flag_graph_from_map(map_from_points(_ring(q, -0.5) + _ring(q, 0.5, np.pi / q)))


def torus_44(a):
    """The map {4,4}_(a,0): an a x a square grid on the torus."""
    if a < 3:
        raise ValueError("torus_44 needs a >= 3 to be a simple map")
    vid = lambda i, j: (i % a) * a + (j % a)  # noqa: E731
    faces = [(vid(i, j), vid(i + 1, j), vid(i + 1, j + 1), vid(i, j + 1)) for i in range(a) for j in range(a)]
    return flag_graph_from_map(MapSpec(a * a, faces))


def central_involution(X):
    """The non-identity central automorphism of X, if there is exactly one."""
    G = automorphisms(X).elements
    central = [
        g for g in G[1:] if all(np.array_equal(g[h], h[g]) for h in G)
    ]
    if len(central) != 1:
        raise ValueError(f"expected one central involution, found {len(central)}")
    return central[0]


def hemicube():
    C = polyhedron("cube")
    return quotient(C, [central_involution(C)])


def pyramid_stg_voltage(q):
    """The q-gonal pyramid as a 4-vertex voltage premaniplex over D_q.

    The base graph is the symmetry type graph of the pyramid with respect to
    the symmetries of its base; D_q acts as permutations of the 2q flags of
    the q-gon.
    """
    base = polygon(q)
    return substitute_voltages(pyramid(2), distinguished_generators(base))


def sample_premaniplex(name, param=None):
    """Build a named sample: polygon, simplex_flag, a polyhedron, torus_44, ..."""
    if name == "polygon":
        return polygon(3 if param is None else int(param))
    if name == "digon":
        return polygon(2)
    if name == "simplex_flag":
        return simplex_flag(3 if param is None else int(param))
    if name == "one_vertex":
        return one_vertex_premaniplex(3 if param is None else int(param))
    if name == "two_orbit":
        n, I = (3, ()) if param is None else param
        return two_orbit_premaniplex(n, I)
    if name == "torus_44":
        return torus_44(4 if param is None else int(param))
    if name == "hemicube":
        return hemicube()
    if name == "pyramid":
        return pyramid_polyhedron(4 if param is None else int(param))
    if name == "prism":
        return prism_polyhedron(4 if param is None else int(param))
    if name == "antiprism":
        return antiprism_polyhedron(4 if param is None else int(param))
    if name == "pyramid_stg":
        return pyramid_stg_voltage(4 if param is None else int(param))
    if name in POLYHEDRA:
        return polyhedron(name)
    raise KeyError(f"unknown sample premaniplex {name!r}")


SAMPLES = POLYHEDRA + ("polygon", "digon", "simplex_flag", "one_vertex", "two_orbit",
                       "torus_44", "hemicube", "pyramid", "prism", "antiprism", "pyramid_stg")
