#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Independently coded evaluators used to cross-check the generic machinery.

Nothing here goes through enumerate_shuffles or koszul_sign: interleavings
are generated recursively with an incremental sign, and factor reorderings
use the adjacent-transposition sign.
"""

import logging
from itertools import product
from typing import Callable, Iterator, List, Sequence, Tuple

from .ab_core import AbAlgebra, ell
from .freemodule import Element
from .signs import Permutation, koszul_sign_by_transpositions, sign_of
from .sym_coalgebra import SymPair, SymWord, normalize
from .tensor_coalgebra import Generator, TensorWord

logger = logging.getLogger(__name__)

PairOperation = Callable[[Generator, Generator], Element]


def _interleavings(x: Sequence[Generator], y: Sequence[Generator]) -> Iterator[Tuple[List[Tuple[Generator, int]], int]]:
    """Every interleaving of x and y as (letter, origin) lists, origin 0 for x and 1 for y, with its Koszul sign."""
    if not x:
        yield [(g, 1) for g in y], 1
        return
    if not y:
        yield [(g, 0) for g in x], 1
        return
    for rest, sign in _interleavings(x[1:], y):
        yield [(x[0], 0)] + rest, sign
    passed = sum(g.degree for g in x)
    for rest, sign in _interleavings(x, y[1:]):
        yield [(y[0], 1)] + rest, sign * sign_of(y[0].degree * passed)


def bracket_by_interleaving(x: TensorWord, y: TensorWord, operation: PairOperation, degree: int) -> Element:
    """
    Sum over interleavings of x and y and over adjacent (x-letter, y-letter)
    positions k of sign (-1)^{degree * (dg of the letters before k)} times
    the interleaved word with that pair replaced by operation.
    """
    terms = []
    for arranged, sign in _interleavings(tuple(x), tuple(y)):
        prefix = 0
        for k in range(len(arranged) - 1):
            (left, origin_left), (right, origin_right) = arranged[k], arranged[k + 1]
            if origin_left == 0 and origin_right == 1:
                head = tuple(g for g, _ in arranged[:k])
                tail = tuple(g for g, _ in arranged[k + 2:])
                for g, c in operation(left, right):
                    terms.append((TensorWord(head + (g,) + tail), sign * sign_of(degree * prefix) * c))
            prefix += left.degree
    return Element.accumulate(terms)


def ell2_by_interleaving(algebra: AbAlgebra, x: TensorWord, y: TensorWord) -> Element:
    return bracket_by_interleaving(x, y, lambda u, v: ell(algebra, u, v), algebra.ell_degree)


def gerstenhaber_bracket(algebra: AbAlgebra, x: TensorWord, y: TensorWord) -> Element:
    """The degree-0 bracket on H for a Gerstenhaber algebra: no positional sign, the raw bracket on letters."""
    return bracket_by_interleaving(x, y, algebra.bracket, 0)


def poisson_bracket_on_H(algebra: AbAlgebra, x: TensorWord, y: TensorWord) -> Element:
    """
    {X, Y} = (-1)^{x'} [X, Y] for a graded Poisson algebra, x' = dg X + 1,
    where [X, Y] is built from [a, b] = (-1)^{dg a} {a, b} with the sign
    (-1)^{dg of the letters before the bracketed pair}.
    """
    def shifted(u, v):
        return sign_of(u.degree) * algebra.bracket(u, v)

    return sign_of(x.degree + 1) * bracket_by_interleaving(x, y, shifted, 1)


def _reorder_by_transpositions(degrees: Sequence[int], order: Sequence[int]) -> int:
    sigma = Permutation([i + 1 for i in order]).inverse()
    return koszul_sign_by_transpositions(degrees, sigma)


def _split_cobracket(w: SymWord, shift: int, prefactor: Callable[[int, int], int],
                     swap_sign: Callable[[int, int], int]) -> Element:
    """
    Shared walk for the cobrackets on symmetric words: each other factor is
    sent left or right, the cut factor is split U|V.
    """
    n = len(w)
    degrees = [f.degree - shift for f in w]
    terms = []
    for s in range(n):
        others = [k for k in range(n) if k != s]
        for sides in product((0, 1), repeat=len(others)):
            chosen = [k for k, side in zip(others, sides) if side == 0]
            rest = [k for k, side in zip(others, sides) if side == 1]
            eps = _reorder_by_transpositions(degrees, chosen + [s] + rest)
            x_i = sum(degrees[k] for k in chosen)
            for position in range(1, len(w[s])):
                u, v = w[s].cut(position)
                u_deg, v_deg = u.degree - shift, v.degree - shift
                sign = eps * prefactor(x_i, u_deg)
                for first, second, extra in ((u, v, 1), (v, u, swap_sign(u_deg, v_deg))):
                    sign_l, left = normalize([w[k] for k in chosen] + [first], shift)
                    sign_r, right = normalize([second] + [w[k] for k in rest], shift)
                    if sign_l and sign_r:
                        terms.append((SymPair(left, right), sign * extra * sign_l * sign_r))
    return Element.accumulate(terms)


def kappa(w: SymWord) -> Element:
    """
    The cobracket of a Gerstenhaber algebra up to homotopy on S+(H[1]),
    degrees dg' = dg - 1:
    (-1)^{x'_I + u'} (X_I.U # V.X_J + (-1)^{u'v'} X_I.V # U.X_J).
    """
    return _split_cobracket(w, 1, lambda x_i, u: sign_of(x_i + u), lambda u, v: sign_of(u * v))


def poisson_delta(w: SymWord) -> Element:
    """
    The cobracket of a Poisson algebra up to homotopy on S+(H), degrees dg:
    X_I.U # V.X_J - (-1)^{uv} X_I.V # U.X_J.
    """
    return _split_cobracket(w, 0, lambda x_i, u: 1, lambda u, v: -sign_of(u * v))


__all__ = ['bracket_by_interleaving', 'ell2_by_interleaving', 'gerstenhaber_bracket', 'poisson_bracket_on_H',
           'kappa', 'poisson_delta']
