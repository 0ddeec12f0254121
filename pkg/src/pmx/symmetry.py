"""Automorphisms, quotients and symmetry type graphs.

Automorphisms act on the right and are stored as arrays ``g`` with
``g[v]`` the image of vertex v.  In a connected premaniplex an automorphism
is determined by the image of a single vertex, which is what the search
relies on.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .premaniplex import (
    Premaniplex,
    _consistent,
    forced_images,
    is_connected,
)


class NotRegular(ValueError):
    pass


class NotAnAutomorphism(ValueError):
    pass


@dataclass(frozen=True)
class AutomorphismGroup:
    elements: tuple
    orbits: tuple

    @property
    def order(self):
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def is_automorphism(X, g):
    g = np.asarray(g)
    if g.shape != (X.vertex_count,) or len(np.unique(g)) != len(g):
        return False
    return all(np.array_equal(X.adj[i][g], g[X.adj[i]]) for i in range(X.rank))


def automorphisms(X, base=0):
    """All automorphisms of a connected premaniplex, identity first."""
    if not is_connected(X):
        raise ValueError("automorphisms() needs a connected premaniplex")
    cands = np.arange(X.vertex_count)
    cands = np.concatenate([[base], cands[cands != base]])
    order, images = forced_images(X, X, base, cands)
    ok, full = _consistent(X, X, order, images)
    elems = []
    for r in np.nonzero(ok)[0]:
        g = full[r]
        if len(np.unique(g)) == len(g):
            g = g.copy()
            g.setflags(write=False)
            elems.append(g)
    return AutomorphismGroup(tuple(elems), tuple(map(tuple, orbits(X, elems))))


def orbits(X, gens):
    """Orbits of the group generated by ``gens``, ordered by smallest vertex."""
    n = X.vertex_count
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for g in gens:
        for v in range(n):
            a, b = find(v), find(int(g[v]))
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups = {}
    for v in range(n):
        groups.setdefault(find(v), []).append(v)
    return [groups[k] for k in sorted(groups)]


def quotient(X, gens):
    """The premaniplex X / <gens>; vertex k is the k-th orbit by smallest element."""
    gens = [np.asarray(g) for g in gens]
    for k, g in enumerate(gens):
        if not is_automorphism(X, g):
            raise NotAnAutomorphism(f"generator {k} is not an automorphism")
    orbs = orbits(X, gens)
    where = np.empty(X.vertex_count, dtype=np.int64)
    for k, orb in enumerate(orbs):
        where[orb] = k
    reps = [orb[0] for orb in orbs]
    adj = [[int(where[X.adj[i, v]]) for v in reps] for i in range(X.rank)]
    return Premaniplex(adj)


def symmetry_type_graph(X, gens=None):
    if gens is None:
        gens = automorphisms(X).elements
    return quotient(X, gens)


def distinguished_generators(X, base=0):
    """rho_0..rho_{n-1}: the automorphisms sending ``base`` to its i-neighbor."""
    if not is_connected(X):
        raise ValueError("distinguished_generators() needs a connected premaniplex")
    cands = X.adj[:, base]
    order, images = forced_images(X, X, base, cands)
    ok, full = _consistent(X, X, order, images)
    gens = []
    for i in range(X.rank):
        g = full[i]
        if not ok[i] or len(np.unique(g)) != len(g):
            raise NotRegular(f"no automorphism maps the base flag to its {i}-adjacent flag")
        g = g.copy()
        g.setflags(write=False)
        gens.append(g)
    return gens


def is_regular(X):
    try:
        distinguished_generators(X)
    except NotRegular:
        return False
    return True


def generated_group(gens, bound=10**6):
    """All elements of the permutation group generated by ``gens``."""
    gens = [tuple(int(a) for a in g) for g in gens]
    if not gens:
        return []
    ident = tuple(range(len(gens[0])))
    seen = {ident}
    out = [ident]
    frontier = [ident]
    while frontier:
        nxt = []
        for h in frontier:
            for g in gens:
                gh = tuple(g[a] for a in h)
                if gh not in seen:
                    seen.add(gh)
                    out.append(gh)
                    nxt.append(gh)
                    if len(out) > bound:
                        raise OverflowError(f"group has more than {bound} elements")
        frontier = nxt
    return out


def flag_orbit_count(X):
    return len(automorphisms(X).orbits)
