import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pmx import catalog as C
from pmx import racg
from pmx.racg import GroupWord, InvalidGenerator, RankMismatch


def test_normalize_examples():
    assert racg.normalize([0, 2, 0], 3).letters == (2,)
    assert racg.normalize([2, 0], 3).letters == (0, 2)
    assert racg.normalize([1, 0, 1], 3).letters == (1, 0, 1)
    assert racg.normalize([0, 0], 3).is_identity()
    assert racg.normalize([0, 1, 2, 2, 1, 0], 3).is_identity()
    assert racg.normalize([3, 1, 0, 3], 4).letters == (1, 0)


def test_commuting_letters_pick_lex_least():
    # r0 floats past r2, then r1 floats past r3
    assert racg.normalize([2, 0, 3, 1], 4).letters == (0, 2, 1, 3)


def test_repr_and_helpers():
    w = GroupWord(3, (2, 0))
    assert repr(w) == "r0r2"
    assert repr(racg.identity(3)) == "1"
    assert len(w) == 2 and list(w) == [0, 2] and w.to_list() == [0, 2]
    assert racg.generator(1, 3).letters == (1,)
    assert racg.inverse(GroupWord(3, (0, 1))).letters == (1, 0)
    assert (GroupWord(3, (0,)) * GroupWord(3, (0,))).is_identity()
    assert racg.is_even(GroupWord(3, (0, 1)))
    assert not racg.is_even(GroupWord(3, (0,)))


def test_errors():
    with pytest.raises(InvalidGenerator):
        GroupWord(3, (3,))
    with pytest.raises(InvalidGenerator):
        GroupWord(3, (-1,))
    with pytest.raises(ValueError):
        GroupWord(0, ())
    with pytest.raises(RankMismatch):
        racg.multiply(GroupWord(2, ()), GroupWord(3, ()))
    with pytest.raises(RankMismatch):
        racg.as_word(GroupWord(2, (0,)), 3)
    with pytest.raises(RankMismatch):
        racg.act(GroupWord(2, (0,)), C.polygon(3).__class__([[0]] * 3), 0)
    with pytest.raises(IndexError):
        racg.act(GroupWord(2, (0,)), C.polygon(3), 6)


def test_act_matches_word_permutation():
    X = C.polyhedron("cube")
    for letters in itertools.product(range(3), repeat=4):
        w = GroupWord(3, letters)
        perm = racg.word_permutation(w, X)
        assert [racg.act(w, X, v) for v in range(0, 48, 7)] == perm[0:48:7].tolist()


def test_rightmost_letter_acts_first():
    X = C.polygon(5)
    w = GroupWord(2, (0, 1))
    assert racg.act(w, X, 0) == X.neighbor(0, X.neighbor(1, 0))


words = st.lists(st.integers(0, 3), max_size=12)


@settings(max_examples=300, deadline=None)
@given(words, words, words)
def test_group_axioms(a, b, c):
    A, B, Cw = (GroupWord(4, w) for w in (a, b, c))
    assert (A * B) * Cw == A * (B * Cw)
    assert (A * racg.inverse(A)).is_identity()
    assert racg.normalize(A.letters, 4) == A
    assert len(A) <= len(a)
    assert len(A) % 2 == len(a) % 2


@settings(max_examples=200, deadline=None)
@given(words, words)
def test_action_is_a_left_action(a, b):
    X = C.simplex_flag(5)
    A, B = GroupWord(4, a), GroupWord(4, b)
    pa, pb = racg.word_permutation(A, X), racg.word_permutation(B, X)
    assert np.array_equal(racg.word_permutation(A * B, X), pa[pb])
