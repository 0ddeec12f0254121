"""Words in the rank-n universal string Coxeter group.

The group is generated by involutions r_0, ..., r_{n-1} where r_i and r_j
commute whenever |i - j| >= 2 (a right-angled Coxeter group on a path).
Every element is stored as the lexicographically least reduced word of its
class, so two words represent the same element iff they compare equal.

A word ``[i_1, ..., i_k]`` denotes the product r_{i_1} ... r_{i_k}; it acts on
flags from the left, so the rightmost letter is applied first.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


class InvalidGenerator(ValueError):
    pass


class RankMismatch(ValueError):
    pass


def _commute(a, b):
    return abs(a - b) >= 2


def _cancel(letters):
    # Delete pairs g ... g whose middle part commutes with g, until none remain.
    word = list(letters)
    changed = True
    while changed:
        changed = False
        p = 0
        while p < len(word):
            g = word[p]
            q = p + 1
            while q < len(word) and word[q] != g and _commute(word[q], g):
                q += 1
            if q < len(word) and word[q] == g:
                del word[q]
                del word[p]
                changed = True
            else:
                p += 1
    return word


def _lex_normal_form(word):
    word = list(word)
    out = []
    while word:
        best = None
        for p, g in enumerate(word):
            if all(_commute(h, g) for h in word[:p]):
                if best is None or g < word[best]:
                    best = p
        out.append(word.pop(best))
    return out


@dataclass(frozen=True)
class GroupWord:
    """An element of the universal Coxeter group of the given rank.

    The constructor normalizes ``letters``, so ``GroupWord(3, (2, 0))`` and
    ``GroupWord(3, (0, 2))`` are the same object.
    """

    rank: int
    letters: tuple = ()

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError(f"rank must be positive, got {self.rank}")
        letters = tuple(int(a) for a in self.letters)
        for a in letters:
            if not 0 <= a < self.rank:
                raise InvalidGenerator(f"generator r_{a} does not exist in rank {self.rank}")
        object.__setattr__(self, "letters", tuple(_lex_normal_form(_cancel(letters))))

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other):
        return multiply(self, other)

    def __repr__(self):
        if not self.letters:
            return "1"
        return "".join(f"r{a}" for a in self.letters)

    def is_identity(self):
        return not self.letters

    def to_list(self):
        return list(self.letters)


def normalize(letters, rank):
    """Canonical form of the product of generators listed in ``letters``.

    >>> normalize([0, 2, 0], 3).letters
    (2,)
    """
    return GroupWord(rank, tuple(letters))


def identity(rank):
    return GroupWord(rank, ())


def generator(i, rank):
    return GroupWord(rank, (i,))


def as_word(w, rank):
    """Coerce a GroupWord or a letter sequence to a GroupWord of ``rank``."""
    if isinstance(w, GroupWord):
        if w.rank != rank:
            raise RankMismatch(f"word of rank {w.rank} used where rank {rank} expected")
        return w
    return GroupWord(rank, tuple(w))


def multiply(a, b):
    """Product a*b; as an action, (a*b)x = a(b x)."""
    if a.rank != b.rank:
        raise RankMismatch(f"cannot multiply words of rank {a.rank} and {b.rank}")
    return GroupWord(a.rank, a.letters + b.letters)


def inverse(w):
    return GroupWord(w.rank, w.letters[::-1])


def is_even(w):
    return len(w.letters) % 2 == 0


def act(w, X, v):
    """Image of vertex ``v`` of premaniplex ``X`` under the monodromy ``w``."""
    if w.rank != X.rank:
        raise RankMismatch(f"word of rank {w.rank} acting on a rank {X.rank} premaniplex")
    if not 0 <= v < X.vertex_count:
        raise IndexError(f"vertex {v} out of range")
    adj = X.adj
    for a in reversed(w.letters):
        v = int(adj[a, v])
    return v


def word_permutation(w, X):
    """The permutation of all vertices of ``X`` induced by ``w``, as an array."""
    if w.rank != X.rank:
        raise RankMismatch(f"word of rank {w.rank} acting on a rank {X.rank} premaniplex")
    perm = np.arange(X.vertex_count)
    for a in reversed(w.letters):
        perm = X.adj[a][perm]
    return perm
