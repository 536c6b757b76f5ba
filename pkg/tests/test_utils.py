#!/usr/bin/env python
# -*- coding: utf-8 -*-

import pytest

from abhomotopy.exceptions import ConfigError
from abhomotopy.tensor_coalgebra import Generator, TensorWord
from abhomotopy.utils import all_words, choose_pool, parse_params, random_homogeneous, random_symword, seeded, \
    small_symwords, word_tuples

LETTERS = [Generator(name, degree) for name, degree in (('a', 0), ('b', 1), ('c', 2), ('d', -1))]


def test_parse_params():
    assert parse_params(['p=2', 'omega=symplectic', ' flag = true ']) == {'p': 2, 'omega': 'symplectic', 'flag': True}
    assert parse_params(None) == {}
    for bad in ('p', '=2'):
        with pytest.raises(ConfigError):
            parse_params([bad])


def test_seeded_generators_are_reproducible():
    assert seeded(3, 'pool').random() == seeded(3, 'pool').random()
    assert seeded(3, 'pool').random() != seeded(3, 'other').random()


def test_choose_pool_keeps_required_letters():
    pool = choose_pool(LETTERS, 3, seeded(0, 'pool'), required=[LETTERS[3], LETTERS[3]])
    assert pool[0] == LETTERS[3]
    assert len(pool) == 3 and len(set(pool)) == 3
    assert choose_pool(LETTERS, 10, seeded(0, 'pool')) != []
    assert len(choose_pool(LETTERS, 10, seeded(0, 'pool'))) == 4


@pytest.mark.parametrize('seed', range(5))
def test_choose_pool_skips_the_unit_and_mixes_parities(seed):
    unit = Generator('1', 0)
    letters = [unit, LETTERS[0], LETTERS[2], LETTERS[1]]
    pool = choose_pool(letters, 2, seeded(seed, 'pool'), avoid=[unit])
    assert unit not in pool
    assert LETTERS[1] in pool
    assert set(choose_pool([unit, LETTERS[0]], 2, seeded(seed, 'pool'), avoid=[unit])) == {unit, LETTERS[0]}


def test_all_words_counts():
    assert len(all_words(LETTERS[:2], 3)) == 2 + 4 + 8


def test_word_tuples_respect_the_letter_budget():
    pairs = word_tuples(LETTERS[:2], 2, 2, 3)
    # (1, 1), (1, 2) and (2, 1) letters
    assert len(pairs) == 4 + 8 + 8
    assert all(sum(len(w) for w in pair) <= 3 for pair in pairs)
    assert len(word_tuples(LETTERS[:3], 1, 4, 4)) == 3 + 9 + 27 + 81


def test_random_homogeneous_stays_in_one_block():
    w = TensorWord(LETTERS[:3])
    v = random_homogeneous(seeded(1, 'w'), w)
    assert 1 <= len(v) <= 3
    assert all(u.block == w.block for u in v.support())
    assert v.coefficient(w) != 0


def test_random_symword_respects_bounds():
    rng = seeded(2, 'sym')
    for _ in range(20):
        w = random_symword(rng, LETTERS, max_factors=2, max_length=2, max_letters=3, shift=0)
        if w is not None:
            assert len(w) <= 2
            assert w.letter_count <= 3


def test_small_symwords():
    words = small_symwords(LETTERS[:2], 2, 0)
    # a, b, a.a, a.b; b.b vanishes since b is odd
    assert len(words) == 4
    assert words == sorted(words)


def test_small_symwords_with_longer_factors():
    words = small_symwords(LETTERS[:2], 2, 0, max_length=2, max_letters=3)
    # 6 single factors, a.a and a.b, then a letter times a word of length two
    assert len(words) == 6 + 2 + 8
    assert all(w.letter_count <= 3 and len(w) <= 2 for w in words)
    # a, aa; a.a, a.aa, aa.aa; a.a.a, a.a.aa; a.a.a.a
    assert len(small_symwords(LETTERS[:1], 4, 0, max_length=2, max_letters=4)) == 2 + 3 + 2 + 1
