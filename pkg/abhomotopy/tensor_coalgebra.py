#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
The Lie coalgebra H: tensor words modulo shuffles, with the cobracket delta.

Classes of H are handled through raw TensorWord representatives. Equality
in H is decided by reducing each letter-multiset block against the span of
its shuffle images.
"""

import logging
from functools import lru_cache
from typing import Dict, Iterable, NamedTuple, Tuple

from sympy.utilities.iterables import multiset_permutations

from .exceptions import ContractViolation
from .freemodule import EchelonBasis, Element, row_reduce
from .signs import enumerate_shuffles, koszul_sign, sign_of

logger = logging.getLogger(__name__)


class Generator(NamedTuple):
    """A letter of A[-a+1]; degree is the shifted degree dg = |.| + a - 1."""
    name: str
    degree: int

    def __str__(self):
        return self.name


class TensorWord(tuple):
    """Nonempty ordered sequence of Generators, a representative of a class of H."""

    def __new__(cls, letters: Iterable[Generator] = ()):
        letters = tuple(letters)
        if not letters:
            raise ContractViolation('tensor words are nonempty')
        return super().__new__(cls, letters)

    @property
    def degree(self) -> int:
        return sum(letter.degree for letter in self)

    @property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(letter.degree for letter in self)

    @property
    def block(self) -> Tuple[Generator, ...]:
        """The letter multiset, as a sorted tuple."""
        return tuple(sorted(self))

    def cut(self, position: int) -> Tuple['TensorWord', 'TensorWord']:
        return TensorWord(self[:position]), TensorWord(self[position:])

    def __str__(self):
        return '|'.join(str(letter) for letter in self)

    def __repr__(self):
        return f'TensorWord({self})'


class TensorPair(tuple):
    """U (x) V, a basis object of H (x) H."""

    def __new__(cls, left: TensorWord, right: TensorWord):
        return super().__new__(cls, (left, right))

    @property
    def left(self) -> TensorWord:
        return self[0]

    @property
    def right(self) -> TensorWord:
        return self[1]

    def __str__(self):
        return f'({self[0]}) # ({self[1]})'


class TensorTriple(tuple):
    """U (x) V (x) W, a basis object of H (x) H (x) H."""

    def __new__(cls, first: TensorWord, second: TensorWord, third: TensorWord):
        return super().__new__(cls, (first, second, third))

    def __str__(self):
        return ' # '.join(f'({w})' for w in self)


def word(*letters: Generator) -> TensorWord:
    return TensorWord(letters)


def word_element(w: TensorWord, coefficient=1) -> Element:
    return Element.basis(w, coefficient)


def shuffle(x: TensorWord, y: TensorWord) -> Element:
    """
    bat_{p,q}(x, y): signed sum of the (p,q)-shuffles of x followed by y; the
    letter a_i lands at position sigma(i).
    :param x: word of length p
    :param y: word of length q
    :return: Element of TensorWords of length p+q
    """
    letters = tuple(x) + tuple(y)
    degrees = [letter.degree for letter in letters]
    terms = []
    for sigma in enumerate_shuffles(len(x), len(y)):
        target = [None] * len(letters)
        for i, letter in enumerate(letters, start=1):
            target[sigma(i) - 1] = letter
        terms.append((TensorWord(target), koszul_sign(degrees, sigma)))
    return Element.accumulate(terms)


def shuffle_elements(x: Element, y: Element) -> Element:
    return Element.sum(c * d * shuffle(u, v) for u, c in x for v, d in y)


@lru_cache(maxsize=None)
def _block_span(block: Tuple[Generator, ...]) -> EchelonBasis:
    distinct = sorted(set(block))
    labels = [distinct.index(letter) for letter in block]
    images = []
    for arrangement in multiset_permutations(labels):
        letters = [distinct[label] for label in arrangement]
        for p in range(1, len(letters)):
            images.append(shuffle(TensorWord(letters[:p]), TensorWord(letters[p:])))
    span = row_reduce(images)
    logger.debug(f'shuffle span of block {"|".join(map(str, block))}: rank {span.rank}')
    return span


def shuffle_span(letters: Iterable[Generator]) -> EchelonBasis:
    """
    Echelon basis of the span of every bat_{p,q}(u, v) with u|v an
    arrangement of the given letter multiset.
    """
    block = tuple(sorted(letters))
    if len(block) < 2:
        raise ContractViolation('shuffle spans need at least two letters')
    return _block_span(block)


@lru_cache(maxsize=None)
def normal_form(w: TensorWord) -> Element:
    """Remainder of a single word modulo the shuffle span of its block."""
    if len(w) == 1:
        return Element.basis(w)
    return _block_span(w.block).reduce(Element.basis(w))


def reduce_mod_shuffles(v: Element) -> Element:
    """Canonical representative in H of an Element of TensorWords."""
    return v.map(normal_form)


def is_zero_in_H(v: Element) -> bool:
    return not reduce_mod_shuffles(v)


def cobracket_delta(x: TensorWord) -> Element:
    """
    delta(X) = sum over cuts X = U|V of U # V - (-1)^{uv} V # U.
    """
    terms = []
    for position in range(1, len(x)):
        u, v = x.cut(position)
        terms.append((TensorPair(u, v), 1))
        terms.append((TensorPair(v, u), -sign_of(u.degree * v.degree)))
    return Element.accumulate(terms)


def _pair_normal_form(pair: TensorPair) -> Element:
    return Element.accumulate(
        (TensorPair(u, v), c * d)
        for u, c in normal_form(pair.left)
        for v, d in normal_form(pair.right)
    )


def _triple_normal_form(triple: TensorTriple) -> Element:
    first, second, third = triple
    return Element.accumulate(
        (TensorTriple(u, v, w), c * d * e)
        for u, c in normal_form(first)
        for v, d in normal_form(second)
        for w, e in normal_form(third)
    )


def reduce_pairs(v: Element) -> Element:
    """Canonical representative in H (x) H, each factor reduced modulo shuffles."""
    return v.map(_pair_normal_form)


def reduce_triples(v: Element) -> Element:
    return v.map(_triple_normal_form)


def pair_is_zero_in_HH(v: Element) -> bool:
    return not reduce_pairs(v)


def triple_is_zero_in_HHH(v: Element) -> bool:
    return not reduce_triples(v)


def tau(v: Element) -> Element:
    """The twist U # V -> (-1)^{uv} V # U."""
    return Element.accumulate(
        (TensorPair(pair.right, pair.left), c * sign_of(pair.left.degree * pair.right.degree))
        for pair, c in v
    )


def tau12(v: Element) -> Element:
    return Element.accumulate(
        (TensorTriple(t[1], t[0], t[2]), c * sign_of(t[0].degree * t[1].degree)) for t, c in v
    )


def tau23(v: Element) -> Element:
    return Element.accumulate(
        (TensorTriple(t[0], t[2], t[1]), c * sign_of(t[1].degree * t[2].degree)) for t, c in v
    )


def delta_tensor_id(v: Element) -> Element:
    """(delta (x) id) on H (x) H; delta has degree 0."""
    return Element.accumulate(
        (TensorTriple(p.left, p.right, pair.right), c * d)
        for pair, c in v
        for p, d in cobracket_delta(pair.left)
    )


def cojacobi_delta(x: TensorWord) -> Element:
    """(id + tau12 tau23 + tau23 tau12) o (delta (x) id) o delta, which vanishes in H (x) H (x) H."""
    inner = delta_tensor_id(cobracket_delta(x))
    return inner + tau12(tau23(inner)) + tau23(tau12(inner))


def block_dimensions(letters: Iterable[Generator]) -> Dict[str, int]:
    """Word count, shuffle-span rank and quotient dimension of a block."""
    block = tuple(sorted(letters))
    distinct = sorted(set(block))
    words = sum(1 for _ in multiset_permutations([distinct.index(g) for g in block]))
    rank = _block_span(block).rank if len(block) > 1 else 0
    return {'words': words, 'span': rank, 'quotient': words - rank}
