#!/usr/bin/env python
# -*- coding: utf-8 -*-

import logging
import random
from itertools import product
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .exceptions import ConfigError
from .freemodule import Element
from .sym_coalgebra import SymWord, normalize
from .tensor_coalgebra import Generator, TensorWord

logger = logging.getLogger(__name__)

COEFFICIENTS = (-2, -1, 1, 2)


def seeded(seed: int, label: str) -> random.Random:
    """A generator determined by the run seed and a label, independent of scheduling."""
    return random.Random(f'{seed}:{label}')


def parse_value(text: str):
    """Integer, then boolean, then the raw string."""
    text = text.strip()
    try:
        return int(text)
    except ValueError:
        pass
    if text.lower() in ('true', 'false'):
        return text.lower() == 'true'
    return text


def parse_params(pairs: Iterable[str]) -> Dict[str, object]:
    """
    Parse repeated k=v options.
    :param pairs: strings like "p=2"
    :return: {k: parsed v}
    """
    params = {}
    for pair in pairs or ():
        key, sep, value = pair.partition('=')
        if not sep or not key.strip():
            raise ConfigError(f'expected k=v, got {pair!r}')
        params[key.strip()] = parse_value(value)
    return params


def choose_pool(letters: Sequence[Generator], size: int, rng: random.Random,
                required: Sequence[Generator] = (), avoid: Sequence[Generator] = ()) -> List[Generator]:
    """
    Letters used to build test words: the required ones, topped up by a seeded sample.
    Avoided letters are only drawn once the others run out. When the sample has a
    single parity of dg and the letters offer both, its last draw is swapped for one
    of the other parity.
    :param letters: every letter of the algebra
    :param size: pool size
    :param rng: seeded generator
    :param required: letters that must be in the pool
    :param avoid: letters drawn last, such as the unit
    :return: the pool, required letters first
    """
    pool = list(dict.fromkeys(required))
    rest = [g for g in letters if g not in pool]
    preferred = [g for g in rest if g not in avoid]
    for candidates in (preferred, [g for g in rest if g in avoid]):
        take = min(size - len(pool), len(candidates))
        if take > 0:
            pool += rng.sample(candidates, take)
    parities = {g.degree & 1 for g in pool}
    if len(parities) == 1 and len(pool) > len(set(required)):
        other = [g for g in preferred if g.degree & 1 not in parities]
        if other:
            pool[-1] = rng.choice(other)
    return pool


def all_words(pool: Sequence[Generator], max_length: int) -> List[TensorWord]:
    words = []
    for length in range(1, max_length + 1):
        words.extend(TensorWord(letters) for letters in product(pool, repeat=length))
    return words


def word_tuples(pool: Sequence[Generator], arity: int, max_length: int,
                max_letters: int) -> List[Tuple[TensorWord, ...]]:
    """Every arity-tuple of words of length <= max_length with at most max_letters letters in all."""
    words = all_words(pool, max_length)
    return [t for t in product(words, repeat=arity) if sum(len(w) for w in t) <= max_letters]


def _multisets(words: Sequence[TensorWord], count: int, budget: int, start: int = 0):
    if count == 0:
        yield ()
        return
    for i in range(start, len(words)):
        if len(words[i]) <= budget:
            for rest in _multisets(words, count - 1, budget - len(words[i]), i):
                yield (words[i],) + rest


def random_word(rng: random.Random, pool: Sequence[Generator], max_length: int) -> TensorWord:
    length = rng.randint(1, max_length)
    return TensorWord(rng.choice(pool) for _ in range(length))


def random_homogeneous(rng: random.Random, w: TensorWord, max_terms: int = 3) -> Element:
    """Up to max_terms distinct rearrangements of w, coefficients in {-2, -1, 1, 2}."""
    words = {w}
    letters = list(w)
    for _ in range(max_terms * 3):
        if len(words) >= max_terms:
            break
        rng.shuffle(letters)
        words.add(TensorWord(letters))
    return Element.accumulate((v, rng.choice(COEFFICIENTS)) for v in sorted(words))


def random_symword(rng: random.Random, pool: Sequence[Generator], max_factors: int, max_length: int,
                   max_letters: int, shift: int, attempts: int = 20) -> Optional[SymWord]:
    """A nonvanishing SymWord within the bounds, or None when none was found."""
    for _ in range(attempts):
        factors = []
        budget = max_letters
        for _ in range(rng.randint(1, max_factors)):
            if budget < 1:
                break
            factors.append(random_word(rng, pool, min(max_length, budget)))
            budget -= len(factors[-1])
        sign, w = normalize(factors, shift)
        if sign:
            return w
    return None


def small_symwords(pool: Sequence[Generator], max_factors: int, shift: int, max_length: int = 1,
                   max_letters: Optional[int] = None) -> List[SymWord]:
    """
    Every nonvanishing SymWord of at most max_factors factors, each a word of
    length <= max_length, with at most max_letters letters in all.
    """
    if max_letters is None:
        max_letters = max_factors * max_length
    words = all_words(pool, max_length)
    found = set()
    for count in range(1, max_factors + 1):
        for factors in _multisets(words, count, max_letters):
            sign, w = normalize(factors, shift)
            if sign:
                found.add(w)
    return sorted(found)


__all__ = ['seeded', 'parse_value', 'parse_params', 'choose_pool', 'all_words', 'word_tuples', 'random_word',
           'random_homogeneous', 'random_symword', 'small_symwords', 'COEFFICIENTS']
