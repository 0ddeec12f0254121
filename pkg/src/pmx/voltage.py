"""Voltage operators and the product X ⋊ Y.

A voltage operator of type (n, m) is an m-premaniplex Y whose darts carry
words of the rank-n Coxeter group.  The product X ⋊ Y of an n-premaniplex
X with it has vertex set V(X) x V(Y), laid out row-major as ``x * |Y| + y``,
and its i-edge joins (x, y) to (volt(i, y) x, y^i).

Voltages of paths compose right to left: the voltage of the walk that
uses darts d_1, ..., d_k (in that order) is volt(d_k) ... volt(d_1).
"""

from __future__ import annotations

from collections import deque

import numpy as np

from . import racg
from .premaniplex import (
    Premaniplex,
    Violation,
    component_of,
    find_isomorphism,
    is_connected,
    validate,
)
from .racg import RankMismatch, as_word, identity, inverse, multiply
from .symmetry import distinguished_generators, generated_group


class InvalidOperator(ValueError):
    pass


class IncompatibleDarts(ValueError):
    pass


class VoltageOperator:
    """The pair (Y, volt); ``volt[i][y]`` is the word on the i-dart at y."""

    __slots__ = ("in_rank", "Y", "volt")

    def __init__(self, Y, volt, in_rank=None):
        if in_rank is None:
            in_rank = Y.rank
        if len(volt) != Y.rank or any(len(row) != Y.vertex_count for row in volt):
            raise InvalidOperator("need one voltage per color and vertex")
        self.in_rank = in_rank
        self.Y = Y
        self.volt = tuple(tuple(as_word(w, in_rank) for w in row) for row in volt)

    @property
    def out_rank(self):
        return self.Y.rank

    def __repr__(self):
        return f"VoltageOperator(in_rank={self.in_rank}, out_rank={self.out_rank}, vertices={self.Y.vertex_count})"

    def __eq__(self, other):
        return (
            isinstance(other, VoltageOperator)
            and self.in_rank == other.in_rank
            and self.Y == other.Y
            and self.volt == other.volt
        )

    def __hash__(self):
        return hash((self.in_rank, self.Y, self.volt))


def validate_operator(op):
    """Violations of inverse-consistency and of the alternating 4-path rule."""
    out = list(validate(op.Y))
    if out:
        return out
    Y, volt = op.Y, op.volt
    for i in range(Y.rank):
        for y in range(Y.vertex_count):
            if volt[i][Y.neighbor(i, y)] != inverse(volt[i][y]):
                out.append(Violation("inverse", (i,), y))
    for i in range(Y.rank):
        for j in range(i + 2, Y.rank):
            for y in range(Y.vertex_count):
                if not walk_voltage(op, y, (j, i, j, i)).is_identity():
                    out.append(Violation("four-path", (i, j), y))
    return out


def check_operator(op):
    problems = validate_operator(op)
    if problems:
        kind, colors, y = problems[0]
        raise InvalidOperator(f"{kind} condition fails for colors {colors} at vertex {y}")
    return op


def walk_voltage(op, y, colors):
    """Voltage of the walk from ``y`` taking the given colors in order."""
    w = identity(op.in_rank)
    for i in colors:
        w = multiply(op.volt[i][y], w)
        y = op.Y.neighbor(i, y)
    return w


def path_voltage(op, path):
    """Voltage of a dart sequence ``[(color, start), ...]``."""
    w = identity(op.in_rank)
    here = None
    for i, y in path:
        if here is not None and y != here:
            raise IncompatibleDarts(f"dart ({i}, {y}) does not start where the path is ({here})")
        w = multiply(op.volt[i][y], w)
        here = op.Y.neighbor(i, y)
    return w


def _word_perm_cache(X):
    cache = {}

    def perm(w):
        p = cache.get(w.letters)
        if p is None:
            p = cache[w.letters] = racg.word_permutation(w, X)
        return p

    return perm


def apply(X, op):
    """The product X ⋊ Y of a premaniplex with a voltage operator."""
    if X.rank != op.in_rank:
        raise RankMismatch(f"operator expects rank {op.in_rank}, got rank {X.rank}")
    Y = op.Y
    nx, ny = X.vertex_count, Y.vertex_count
    perm = _word_perm_cache(X)
    adj = np.empty((Y.rank, nx * ny), dtype=np.int64)
    xs = np.arange(nx) * ny
    for i in range(Y.rank):
        for y in range(ny):
            adj[i, xs + y] = perm(op.volt[i][y]) * ny + Y.adj[i, y]
    return Premaniplex(adj)


def apply_rooted(X, op, y=0, x=None):
    """Component of (x, y) in X ⋊ Y.  X may be a RootedPremaniplex."""
    if hasattr(X, "premaniplex"):
        x = X.root if x is None else x
        X = X.premaniplex
    x = 0 if x is None else x
    return component_of(apply(X, op), x * op.Y.vertex_count + y)


def fiber_projection(X, op):
    """Array mapping each vertex of X ⋊ Y to its Y-coordinate."""
    return np.tile(np.arange(op.Y.vertex_count), X.vertex_count)


# ---------------------------------------------------------------------------
# Connectivity
# ---------------------------------------------------------------------------


def _tree_voltages(op, root):
    """BFS spanning tree of Y with the voltage of the tree path root -> y."""
    Y = op.Y
    tau = {root: identity(op.in_rank)}
    tree = set()
    queue = deque([root])
    while queue:
        y = queue.popleft()
        for i in range(Y.rank):
            z = Y.neighbor(i, y)
            if z not in tau:
                tau[z] = multiply(op.volt[i][y], tau[y])
                tree.add((i, y))
                tree.add((i, z))
                queue.append(z)
    return tau, tree


def fundamental_voltages(op, y0=0):
    """Voltages of the closed walks at y0 through each non-tree dart."""
    if not is_connected(op.Y):
        raise ValueError("operator graph is disconnected")
    tau, tree = _tree_voltages(op, y0)
    Y = op.Y
    out = []
    for i in range(Y.rank):
        for y in range(Y.vertex_count):
            if (i, y) in tree:
                continue
            z = Y.neighbor(i, y)
            out.append(multiply(inverse(tau[z]), multiply(op.volt[i][y], tau[y])))
    return out


def is_product_connected(X, op, y0=0):
    """Whether X ⋊ Y is connected, without building the product.

    Closes the orbit of vertex 0 of X under the voltages of the fundamental
    cycles of Y at y0 and checks it is everything.
    """
    if not is_connected(X):
        raise ValueError("X is disconnected")
    gens = [racg.word_permutation(w, X) for w in set(fundamental_voltages(op, y0))]
    seen = np.zeros(X.vertex_count, dtype=bool)
    seen[0] = True
    frontier = np.array([0])
    while len(frontier):
        new = np.unique(np.concatenate([g[frontier] for g in gens])) if gens else frontier[:0]
        new = new[~seen[new]]
        seen[new] = True
        frontier = new
    return bool(seen.all())


# ---------------------------------------------------------------------------
# Mix
# ---------------------------------------------------------------------------


def mix_operator(Y):
    volt = [[(i,)] * Y.vertex_count for i in range(Y.rank)]
    return VoltageOperator(Y, volt, Y.rank)


def mix(X, Y):
    return apply(X, mix_operator(Y))


def is_mixing(op):
    if op.in_rank != op.out_rank:
        return False
    return all(w.letters == (i,) for i, row in enumerate(op.volt) for w in row)


def swap_iso_check(op1, op2):
    """Is (y1, y2) -> (y2, y1) an isomorphism Y1 ⋊_{op2} Y2 -> Y2 ⋊_{op1} Y1?"""
    if not (op1.in_rank == op1.out_rank == op2.in_rank == op2.out_rank):
        raise RankMismatch("swap_iso_check needs two (n, n)-operators of the same n")
    A = apply(op1.Y, op2)
    B = apply(op2.Y, op1)
    n1, n2 = op1.Y.vertex_count, op2.Y.vertex_count
    v = np.arange(n1 * n2)
    swap = (v % n2) * n1 + v // n2
    return all(np.array_equal(swap[A.adj[i]], B.adj[i][swap]) for i in range(A.rank))


# ---------------------------------------------------------------------------
# Composition and equivalence
# ---------------------------------------------------------------------------


def compose(op1, op2):
    """The operator whose action is "apply op1, then op2"."""
    if op2.in_rank != op1.out_rank:
        raise RankMismatch(
            f"second operator expects rank {op2.in_rank}, first produces rank {op1.out_rank}"
        )
    Y = apply(op1.Y, op2)
    n1, n2 = op1.Y.vertex_count, op2.Y.vertex_count
    volt = [[None] * (n1 * n2) for _ in range(Y.rank)]
    for i in range(Y.rank):
        for y1 in range(n1):
            for y2 in range(n2):
                w = op2.volt[i][y2]
                volt[i][y1 * n2 + y2] = walk_voltage(op1, y1, reversed(w.letters))
    return VoltageOperator(Y, volt, op1.in_rank)


def normalize_voltages(op, root=0):
    """Equivalent operator with trivial voltage on a BFS spanning tree at ``root``."""
    if not is_connected(op.Y):
        raise ValueError("operator graph is disconnected")
    tau, _ = _tree_voltages(op, root)
    Y = op.Y
    volt = [
        [
            multiply(inverse(tau[Y.neighbor(i, y)]), multiply(op.volt[i][y], tau[y]))
            for y in range(Y.vertex_count)
        ]
        for i in range(Y.rank)
    ]
    return VoltageOperator(Y, volt, op.in_rank)


def gauge_transform(op, g):
    """Replace volt(d: y -> z) by g[z]^-1 volt(d) g[y] for words ``g[y]``."""
    Y = op.Y
    g = [as_word(w, op.in_rank) for w in g]
    volt = [
        [multiply(inverse(g[Y.neighbor(i, y)]), multiply(op.volt[i][y], g[y])) for y in range(Y.vertex_count)]
        for i in range(Y.rank)
    ]
    return VoltageOperator(Y, volt, op.in_rank)


def operators_equivalent(op1, op2, testbed):
    """Bounded equivalence check over a finite testbed.

    True iff for each X in ``testbed`` the two products are isomorphic by a
    map that commutes with the projection to Y.  Passing is evidence of
    equivalence, not a proof.  Both operators must share the rank pair and
    the underlying premaniplex.
    """
    if (op1.in_rank, op1.out_rank) != (op2.in_rank, op2.out_rank):
        raise IncompatibleDarts("operators have different rank pairs")
    if op1.Y != op2.Y:
        raise IncompatibleDarts("operators live on different premaniplexes")
    for X in testbed:
        A, B = apply(X, op1), apply(X, op2)
        proj = fiber_projection(X, op1)
        if find_isomorphism(A, B, vertex_classes=(proj, proj)) is None:
            return False
    return True


# ---------------------------------------------------------------------------
# Finite voltage groups
# ---------------------------------------------------------------------------


def _perm_mul(a, b):
    return a[b]


class FinVoltagePremaniplex:
    """A premaniplex whose darts carry permutations of {0, ..., d-1}.

    ``volt[i][x]`` is the permutation on the i-dart at x.  Permutations
    multiply as functions: (a*b)[k] = a[b[k]].
    """

    __slots__ = ("X", "volt", "group")

    def __init__(self, X, volt, group=None):
        volt = np.array(volt, dtype=np.int64)
        if volt.ndim != 3 or volt.shape[:2] != (X.rank, X.vertex_count):
            raise InvalidOperator("voltages must have shape (rank, vertex_count, degree)")
        d = volt.shape[2]
        if d < 1 or not np.array_equal(np.sort(volt, axis=2), np.broadcast_to(np.arange(d), volt.shape)):
            raise InvalidOperator("every voltage must be a permutation of 0..degree-1")
        volt.setflags(write=False)
        self.X = X
        self.volt = volt
        self.group = None if group is None else [tuple(int(a) for a in g) for g in group]

    @property
    def degree(self):
        return self.volt.shape[2]

    def __repr__(self):
        return f"FinVoltagePremaniplex(rank={self.X.rank}, vertices={self.X.vertex_count}, degree={self.degree})"


def fin_walk_voltage(xp, x, colors):
    p = np.arange(xp.degree)
    for i in colors:
        p = _perm_mul(xp.volt[i, x], p)
        x = xp.X.neighbor(i, x)
    return p


def validate_fin(xp):
    out = list(validate(xp.X))
    if out:
        return out
    X = xp.X
    ident = np.arange(xp.degree)
    for i in range(X.rank):
        for x in range(X.vertex_count):
            back = xp.volt[i, X.neighbor(i, x)]
            if not np.array_equal(_perm_mul(back, xp.volt[i, x]), ident):
                out.append(Violation("inverse", (i,), x))
    for i in range(X.rank):
        for j in range(i + 2, X.rank):
            for x in range(X.vertex_count):
                if not np.array_equal(fin_walk_voltage(xp, x, (j, i, j, i)), ident):
                    out.append(Violation("four-path", (i, j), x))
    return out


def derived_graph(xp, bound=10**6):
    """The derived cover with vertices (x, g), laid out as x * |G| + index(g)."""
    X = xp.X
    if xp.group is not None:
        elems = xp.group
    else:
        gens = {tuple(int(a) for a in xp.volt[i, x]) for i in range(X.rank) for x in range(X.vertex_count)}
        elems = generated_group(sorted(gens), bound=bound)
    index = {g: k for k, g in enumerate(elems)}
    G = len(elems)
    table = np.array(elems, dtype=np.int64)
    left = {}
    adj = np.empty((X.rank, X.vertex_count * G), dtype=np.int64)
    for i in range(X.rank):
        for x in range(X.vertex_count):
            s = tuple(int(a) for a in xp.volt[i, x])
            mul = left.get(s)
            if mul is None:
                prods = np.asarray(s)[table]
                try:
                    mul = np.array([index[tuple(row)] for row in prods.tolist()])
                except KeyError:
                    raise ValueError("explicit group is not closed under the voltages") from None
                left[s] = mul
            adj[i, x * G : (x + 1) * G] = X.neighbor(i, x) * G + mul
    return Premaniplex(adj)


def theta_voltage(xp, op):
    """Voltages on X ⋊ Y making its derived graph the product of X's cover with Y.

    The i-dart at (x, y) gets the voltage, in xp, of the walk from x that
    spells the word volt(i, y).
    """
    if xp.X.rank != op.in_rank:
        raise RankMismatch(f"operator expects rank {op.in_rank}, got rank {xp.X.rank}")
    P = apply(xp.X, op)
    ny = op.Y.vertex_count
    volt = np.empty((P.rank, P.vertex_count, xp.degree), dtype=np.int64)
    for i in range(P.rank):
        for y in range(ny):
            colors = tuple(reversed(op.volt[i][y].letters))
            for x in range(xp.X.vertex_count):
                volt[i, x * ny + y] = fin_walk_voltage(xp, x, colors)
    return FinVoltagePremaniplex(P, volt, xp.group)


def substitute_voltages(op, gens):
    """Replace each letter r_i of the operator's words by the permutation gens[i]."""
    gens = [np.asarray(g) for g in gens]
    if len(gens) != op.in_rank:
        raise RankMismatch("need one permutation per generator")
    d = len(gens[0])
    Y = op.Y
    volt = np.empty((Y.rank, Y.vertex_count, d), dtype=np.int64)
    for i in range(Y.rank):
        for y in range(Y.vertex_count):
            p = np.arange(d)
            for a in reversed(op.volt[i][y].letters):
                p = _perm_mul(gens[a], p)
            volt[i, y] = p
    return FinVoltagePremaniplex(Y, volt)


def regular_product_via_derived(X, op, base=0):
    """X ⋊ Y for regular X, built as a derived graph over Aut(X)."""
    if X.rank != op.in_rank:
        raise RankMismatch(f"operator expects rank {op.in_rank}, got rank {X.rank}")
    rho = distinguished_generators(X, base)
    return derived_graph(substitute_voltages(op, rho))


def lift_automorphism(g, op):
    """The automorphism (x, y) -> (x g, y) of X ⋊ Y induced by g in Aut(X)."""
    g = np.asarray(g)
    ny = op.Y.vertex_count
    v = np.arange(len(g) * ny)
    return g[v // ny] * ny + v % ny
