"""Premaniplexes as arrays of color involutions.

A rank-n premaniplex on V vertices is an integer array ``adj`` of shape
(n, V) where ``adj[i, v]`` is the i-adjacent vertex of v.  A fixed point of
``adj[i]`` is a semiedge of color i.  Vertices are always 0..V-1.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np


class InvalidPremaniplex(ValueError):
    pass


class Violation(NamedTuple):
    kind: str
    colors: tuple
    vertex: int


class Premaniplex:
    """A finite properly n-edge-colored n-valent graph.

    Construction only checks that every color is a permutation of the
    vertex set; call :func:`validate` for the involution and commuting
    conditions.
    """

    __slots__ = ("adj", "labels")

    def __init__(self, adjacency, labels=None):
        adj = np.array(adjacency, dtype=np.int64)
        if adj.ndim != 2 or adj.shape[0] < 1 or adj.shape[1] < 1:
            raise InvalidPremaniplex("adjacency must be a non-empty (rank, vertex_count) array")
        n, V = adj.shape
        for i in range(n):
            row = adj[i]
            if row.min() < 0 or row.max() >= V:
                raise InvalidPremaniplex(f"color {i} refers to a vertex out of range")
            if len(np.unique(row)) != V:
                raise InvalidPremaniplex(f"color {i} is not a permutation")
        adj.setflags(write=False)
        self.adj = adj
        if labels is not None:
            labels = tuple(str(s) for s in labels)
            if len(labels) != V:
                raise InvalidPremaniplex("one label per vertex required")
        self.labels = labels

    @property
    def rank(self):
        return self.adj.shape[0]

    @property
    def vertex_count(self):
        return self.adj.shape[1]

    def __len__(self):
        return self.adj.shape[1]

    def neighbor(self, i, v):
        return int(self.adj[i, v])

    def __eq__(self, other):
        return isinstance(other, Premaniplex) and np.array_equal(self.adj, other.adj)

    def __hash__(self):
        return hash(self.adj.tobytes())

    def __repr__(self):
        return f"Premaniplex(rank={self.rank}, vertex_count={self.vertex_count})"


@dataclass(frozen=True)
class RootedPremaniplex:
    """The connected component of ``root``, re-indexed in BFS order.

    ``vertices[k]`` is the id in the parent premaniplex of new vertex k; the
    root is always new vertex 0.
    """

    premaniplex: Premaniplex
    root: int = 0
    vertices: tuple = field(default=(), compare=False)


def validate(X):
    """Return the list of violations of the premaniplex axioms (empty if ok).

    Violations are reported in a fixed order: involution failures by color
    and vertex, then commuting failures by color pair and vertex.
    """
    out = []
    adj = X.adj
    V = np.arange(X.vertex_count)
    for i in range(X.rank):
        bad = np.nonzero(adj[i][adj[i]] != V)[0]
        out.extend(Violation("involution", (i,), int(v)) for v in bad)
    for i in range(X.rank):
        for j in range(i + 2, X.rank):
            p = adj[i][adj[j][adj[i][adj[j]]]]
            bad = np.nonzero(p != V)[0]
            out.extend(Violation("commuting", (i, j), int(v)) for v in bad)
    return out


def is_valid(X):
    return not validate(X)


def check(X):
    problems = validate(X)
    if problems:
        kind, colors, v = problems[0]
        raise InvalidPremaniplex(f"{kind} condition fails for colors {colors} at vertex {v}")
    return X


def _bfs_order(X, root, colors=None):
    colors = range(X.rank) if colors is None else colors
    adj = X.adj
    seen = {root: 0}
    order = [root]
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for i in colors:
            u = int(adj[i, v])
            if u not in seen:
                seen[u] = len(order)
                order.append(u)
                queue.append(u)
    return order


def _component_labels(X, colors=None):
    # Union-find over the chosen colors; labels numbered by smallest vertex.
    colors = range(X.rank) if colors is None else list(colors)
    n = X.vertex_count
    parent = np.arange(n)

    def find(a):
        root = a
        while parent[root] != root:
            root = parent[root]
        while parent[a] != root:
            parent[a], a = root, parent[a]
        return root

    for i in colors:
        row = X.adj[i]
        for v in range(n):
            u = int(row[v])
            if u > v:
                a, b = find(v), find(u)
                if a != b:
                    parent[max(a, b)] = min(a, b)
    roots = np.array([find(v) for v in range(n)])
    _, labels = np.unique(roots, return_inverse=True)
    return labels


def components(X, colors=None):
    """Vertex sets of the connected components, ordered by smallest vertex.

    ``colors`` restricts which edges count; by default all colors are used.
    """
    labels = _component_labels(X, colors)
    return [sorted(np.nonzero(labels == c)[0].tolist()) for c in range(labels.max() + 1)]


def is_connected(X):
    return len(_bfs_order(X, 0)) == X.vertex_count


def induced(X, vertices):
    """Sub-premaniplex on a union of components, in the given vertex order."""
    vertices = [int(v) for v in vertices]
    index = {v: k for k, v in enumerate(vertices)}
    try:
        adj = [[index[int(X.adj[i, v])] for v in vertices] for i in range(X.rank)]
    except KeyError:
        raise ValueError("vertex set is not closed under adjacency") from None
    labels = None if X.labels is None else [X.labels[v] for v in vertices]
    return Premaniplex(adj, labels)


def component_of(X, v):
    if not 0 <= v < X.vertex_count:
        raise IndexError(f"vertex {v} out of range")
    order = _bfs_order(X, v)
    return RootedPremaniplex(induced(X, order), 0, tuple(order))


def restrict_section(X, k, l):
    """Keep colors k+1 .. l-1, recolored 0 .. l-k-2.

    Components of the result are the (k, l)-sections of X.
    """
    if not (-1 <= k < l <= X.rank) or l - k - 1 < 1:
        raise ValueError(f"bad section bounds k={k}, l={l} for rank {X.rank}")
    return Premaniplex(X.adj[k + 1 : l], X.labels)


def face_counts(X):
    """Number of i-faces for each i: components after deleting color i."""
    return tuple(
        len(components(X, [j for j in range(X.rank) if j != i])) for i in range(X.rank)
    )


def is_maniplex(X):
    adj = X.adj
    V = np.arange(X.vertex_count)
    if np.any(adj == V):
        return False
    for i in range(X.rank):
        for j in range(i + 1, X.rank):
            if np.any(adj[i] == adj[j]):
                return False
    return is_connected(X)


def disjoint_union(*parts):
    rank = parts[0].rank
    rows = [[] for _ in range(rank)]
    offset = 0
    for P in parts:
        if P.rank != rank:
            raise ValueError("ranks differ")
        for i in range(rank):
            rows[i].extend((P.adj[i] + offset).tolist())
        offset += P.vertex_count
    return Premaniplex(rows)


def relabel(X, perm):
    """Copy of X where old vertex v becomes ``perm[v]``."""
    perm = np.asarray(perm)
    inv = np.empty_like(perm)
    inv[perm] = np.arange(len(perm))
    return Premaniplex(perm[X.adj[:, inv]])


# ---------------------------------------------------------------------------
# Isomorphism and homomorphism search
# ---------------------------------------------------------------------------


def _spanning_tree(X, root):
    """BFS order with (parent, color) for each non-root vertex."""
    adj = X.adj
    parent = {root: (-1, -1)}
    order = [root]
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for i in range(X.rank):
            u = int(adj[i, v])
            if u not in parent:
                parent[u] = (v, i)
                order.append(u)
                queue.append(u)
    return order, parent


def forced_images(X, Y, root, candidates):
    """Extend root -> c for every candidate c along a BFS tree of X's component.

    Returns (order, images) with images of shape (len(candidates), len(order));
    column k holds the forced image of ``order[k]``.  Only tree edges are
    used, so the result still has to be checked against the other edges.
    """
    order, parent = _spanning_tree(X, root)
    pos = {v: k for k, v in enumerate(order)}
    images = np.empty((len(candidates), len(order)), dtype=np.int64)
    images[:, 0] = candidates
    Yadj = Y.adj
    for k in range(1, len(order)):
        p, i = parent[order[k]]
        images[:, k] = Yadj[i][images[:, pos[p]]]
    return order, images


def _consistent(X, Y, order, images):
    """Boolean mask of candidate rows that define homomorphisms."""
    V = X.vertex_count
    full = np.full((images.shape[0], V), -1, dtype=np.int64)
    full[:, order] = images
    ok = np.ones(images.shape[0], dtype=bool)
    idx = np.asarray(order)
    for i in range(X.rank):
        ok &= (Y.adj[i][full[:, idx]] == full[:, X.adj[i][idx]]).all(axis=1)
    return ok, full


def _component_isomorphism(X, Y, xroot, candidates, xclass=None, yclass=None):
    if xclass is not None:
        candidates = [c for c in candidates if yclass[c] == xclass[xroot]]
    if not len(candidates):
        return None
    order, images = forced_images(X, Y, xroot, np.asarray(candidates))
    ok, full = _consistent(X, Y, order, images)
    idx = np.asarray(order)
    for r in np.nonzero(ok)[0]:
        img = full[r, idx]
        if len(np.unique(img)) != len(img):
            continue
        if xclass is not None and not np.array_equal(yclass[img], xclass[idx]):
            continue
        return dict(zip(order, img.tolist()))
    return None


def find_isomorphism(X, Y, seed=None, vertex_classes=None):
    """A color-preserving bijection V(X) -> V(Y) as a list, or None.

    For connected inputs every candidate image of the base vertex is tried
    in increasing order; with ``seed=(v, w)`` only v -> w is tried.
    Disconnected inputs are matched component by component.
    ``vertex_classes=(cx, cy)`` restricts to isomorphisms with
    ``cy[f(v)] == cx[v]``.
    """
    if X.rank != Y.rank or X.vertex_count != Y.vertex_count:
        return None
    xclass = yclass = None
    if vertex_classes is not None:
        xclass, yclass = (np.asarray(c) for c in vertex_classes)
    if seed is not None:
        v, w = seed
        if not is_connected(X):
            part = _component_isomorphism(X, Y, v, [w], xclass, yclass)
            if part is None:
                return None
            rest_x = [u for u in range(X.vertex_count) if u not in part]
            used = set(part.values())
            rest_y = [u for u in range(Y.vertex_count) if u not in used]
            sub = None
            if rest_x:
                Xs, Ys = induced(X, rest_x), induced(Y, rest_y)
                cls = None if xclass is None else (xclass[rest_x], yclass[rest_y])
                sub = find_isomorphism(Xs, Ys, vertex_classes=cls)
                if sub is None:
                    return None
                for a, b in enumerate(sub):
                    part[rest_x[a]] = rest_y[b]
            return [part[u] for u in range(X.vertex_count)]
        part = _component_isomorphism(X, Y, v, [w], xclass, yclass)
        return None if part is None else [part[u] for u in range(X.vertex_count)]

    xcomps = components(X)
    ycomps = components(Y)
    if sorted(map(len, xcomps)) != sorted(map(len, ycomps)):
        return None
    result = {}
    free = list(range(len(ycomps)))
    for comp in xcomps:
        for k in free:
            if len(ycomps[k]) != len(comp):
                continue
            part = _component_isomorphism(X, Y, comp[0], ycomps[k], xclass, yclass)
            if part is not None:
                result.update(part)
                free.remove(k)
                break
        else:
            return None
    return [result[u] for u in range(X.vertex_count)]


def is_isomorphic(X, Y):
    return find_isomorphism(X, Y) is not None


def find_homomorphism(X, Y):
    """A color-preserving map V(X) -> V(Y) for connected X, or None."""
    if X.rank != Y.rank:
        return None
    order, images = forced_images(X, Y, 0, np.arange(Y.vertex_count))
    ok, full = _consistent(X, Y, order, images)
    if len(order) != X.vertex_count:
        raise ValueError("find_homomorphism needs a connected source")
    rows = np.nonzero(ok)[0]
    return None if not len(rows) else full[rows[0]].tolist()


def covers(X, Y):
    return find_homomorphism(X, Y) is not None


# ---------------------------------------------------------------------------
# Rank-3 maps
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MapSpec:
    """A closed map given by its faces as cyclic vertex sequences.

    Edges are the consecutive pairs of the face cycles; every edge must lie
    on exactly two face sides.  Vertex ids are 0..vertex_count-1.
    """

    vertex_count: int
    faces: tuple

    def __post_init__(self):
        object.__setattr__(self, "faces", tuple(tuple(int(v) for v in f) for f in self.faces))

    @property
    def edges(self):
        seen = []
        found = set()
        for f in self.faces:
            for a, b in zip(f, f[1:] + f[:1]):
                e = (min(a, b), max(a, b))
                if e not in found:
                    found.add(e)
                    seen.append(e)
        return seen


def _edge_sides(m):
    sides = {}
    for fi, f in enumerate(m.faces):
        if len(f) < 2 or len(set(f)) != len(f):
            raise InvalidPremaniplex(f"face {fi} is not a simple cycle")
        for p in range(len(f)):
            a, b = f[p], f[(p + 1) % len(f)]
            if a == b:
                raise InvalidPremaniplex(f"face {fi} has a loop")
            sides.setdefault((min(a, b), max(a, b)), []).append((fi, p))
    for e, s in sides.items():
        if len(s) != 2:
            raise InvalidPremaniplex(f"edge {e} lies on {len(s)} face sides, expected 2")
    used = {v for f in m.faces for v in f}
    if used != set(range(m.vertex_count)):
        raise InvalidPremaniplex("vertex ids must be exactly 0..vertex_count-1")
    return sides


def flag_graph_from_map(m):
    """Rank-3 flag graph of a map; flags are (vertex, edge, face) triples.

    Flags are indexed face by face: flag (f, p, s) sits on the side from
    position p to p+1 of face f, at its start (s=0) or end (s=1) vertex.
    Color 0 moves the vertex, color 1 the edge, color 2 the face.
    """
    sides = _edge_sides(m)
    index = {}
    labels = []
    for fi, f in enumerate(m.faces):
        for p in range(len(f)):
            for s in (0, 1):
                index[(fi, p, s)] = len(labels)
                v = f[(p + s) % len(f)]
                a, b = f[p], f[(p + 1) % len(f)]
                labels.append(f"v{v}:e{min(a, b)}-{max(a, b)}:f{fi}")
    N = len(labels)
    adj = np.empty((3, N), dtype=np.int64)
    for (fi, p, s), k in index.items():
        f = m.faces[fi]
        L = len(f)
        adj[0, k] = index[(fi, p, 1 - s)]
        adj[1, k] = index[(fi, (p - 1) % L, 1)] if s == 0 else index[(fi, (p + 1) % L, 0)]
        v = f[(p + s) % L]
        a, b = f[p], f[(p + 1) % L]
        (f1, p1), (f2, p2) = sides[(min(a, b), max(a, b))]
        gi, gp = (f2, p2) if (f1, p1) == (fi, p) else (f1, p1)
        g = m.faces[gi]
        s2 = 0 if g[gp] == v else 1
        adj[2, k] = index[(gi, gp, s2)]
    return Premaniplex(adj, labels)
