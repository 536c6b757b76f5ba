#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
The symmetric coalgebra S+(H[a-b]).

A SymWord is a graded-symmetric product of TensorWords held in canonical
order. Factor degrees are dg'' = dg - a + b; every operation takes the shift
s = a - b so that dg''(X) = X.degree - s. Equality is decided after reducing
every factor modulo shuffles and renormalizing.
"""

import logging
from itertools import combinations
from typing import Iterable, List, Sequence, Tuple

from .ab_core import AbAlgebra, D, ell2_doubleprime
from .exceptions import ContractViolation
from .freemodule import Element
from .signs import reorder_sign, sign_of
from .tensor_coalgebra import TensorWord, normal_form

logger = logging.getLogger(__name__)


def factor_key(w: TensorWord):
    """Total order on factors: word length, then the letters."""
    return len(w), tuple(w)


class SymWord(tuple):
    """X_1 ... X_n with n >= 1, factors in canonical order."""

    def __new__(cls, factors: Iterable[TensorWord] = ()):
        factors = tuple(factors)
        if not factors:
            raise ContractViolation('symmetric words are nonempty')
        return super().__new__(cls, factors)

    def degree(self, shift: int) -> int:
        return sum(w.degree - shift for w in self)

    def degrees(self, shift: int) -> List[int]:
        return [w.degree - shift for w in self]

    @property
    def letter_count(self) -> int:
        return sum(len(w) for w in self)

    def __str__(self):
        return ' . '.join(f'[{w}]' for w in self)

    def __repr__(self):
        return f'SymWord({self})'


class SymPair(tuple):
    """A (x) B in S+(H[a-b]) (x) S+(H[a-b])."""

    def __new__(cls, left: SymWord, right: SymWord):
        return super().__new__(cls, (left, right))

    @property
    def left(self) -> SymWord:
        return self[0]

    @property
    def right(self) -> SymWord:
        return self[1]

    def __str__(self):
        return f'{self[0]} # {self[1]}'


class SymTriple(tuple):

    def __new__(cls, first: SymWord, second: SymWord, third: SymWord):
        return super().__new__(cls, (first, second, third))

    def __str__(self):
        return ' # '.join(str(w) for w in self)


def normalize(factors: Sequence[TensorWord], shift: int) -> Tuple[int, SymWord]:
    """
    Sort factors into canonical order.
    :param factors: factors in their current order
    :param shift: a - b
    :return: (sign, SymWord); sign is 0 when two equal factors of odd dg'' meet
    """
    factors = list(factors)
    degrees = [w.degree - shift for w in factors]
    order = sorted(range(len(factors)), key=lambda i: factor_key(factors[i]))
    for i, j in zip(order, order[1:]):
        if factors[i] == factors[j] and degrees[i] & 1:
            return 0, SymWord(factors[k] for k in order)
    return reorder_sign(degrees, order), SymWord(factors[k] for k in order)


def sym_element(factors: Sequence[TensorWord], shift: int, coefficient=1) -> Element:
    sign, w = normalize(factors, shift)
    return Element.basis(w, sign * coefficient) if sign else Element()


def _product_terms(parts: Sequence[Element]):
    """Multilinear expansion: every choice of one term per part, with the coefficient product."""
    combos = [((), 1)]
    for part in parts:
        combos = [(chosen + (w,), c * d) for chosen, c in combos for w, d in part]
    return combos


def _reduce_symword(w: SymWord, shift: int) -> Element:
    terms = []
    for factors, c in _product_terms([normal_form(x) for x in w]):
        sign, normal = normalize(factors, shift)
        if sign:
            terms.append((normal, sign * c))
    return Element.accumulate(terms)


def reduce_sym(v: Element, shift: int) -> Element:
    """Canonical form in S+(H[a-b]): every factor reduced modulo shuffles."""
    return v.map(lambda w: _reduce_symword(w, shift))


def reduce_sym_pairs(v: Element, shift: int) -> Element:
    return v.map(lambda p: Element.accumulate(
        (SymPair(x, y), c * d)
        for x, c in _reduce_symword(p.left, shift)
        for y, d in _reduce_symword(p.right, shift)
    ))


def reduce_sym_triples(v: Element, shift: int) -> Element:
    return v.map(lambda t: Element.accumulate(
        (SymTriple(x, y, z), c * d * e)
        for x, c in _reduce_symword(t[0], shift)
        for y, d in _reduce_symword(t[1], shift)
        for z, e in _reduce_symword(t[2], shift)
    ))


def _pair(left: Sequence[TensorWord], right: Sequence[TensorWord], shift: int, coefficient) -> Element:
    sign_l, wl = normalize(left, shift)
    sign_r, wr = normalize(right, shift)
    sign = sign_l * sign_r
    return Element.basis(SymPair(wl, wr), sign * coefficient) if sign else Element()


def coproduct_Delta(w: SymWord, shift: int) -> Element:
    """
    Delta(X_1...X_n) = sum over ordered splits I, J (both nonempty) of
    eps(I, J) X_I # X_J. Equal factors count as distinct positions.
    """
    n = len(w)
    degrees = w.degrees(shift)
    terms = []
    for size in range(1, n):
        for chosen in combinations(range(n), size):
            rest = [k for k in range(n) if k not in chosen]
            sign = reorder_sign(degrees, list(chosen) + rest)
            terms.append(_pair([w[k] for k in chosen], [w[k] for k in rest], shift, sign))
    return Element.sum(terms)


def _pull_to_front(w: SymWord, chosen: Sequence[int], shift: int) -> Tuple[int, List[TensorWord]]:
    rest = [k for k in range(len(w)) if k not in chosen]
    return reorder_sign(w.degrees(shift), list(chosen) + rest), [w[k] for k in rest]


def extend_ell_doubleprime(algebra: AbAlgebra, w: SymWord) -> Element:
    """ell''(X_1...X_n) = sum over i < j of eps ell''_2(X_i, X_j).X_1...^ij...X_n"""
    shift = algebra.a - algebra.b
    terms = []
    for i, j in combinations(range(len(w)), 2):
        sign, rest = _pull_to_front(w, (i, j), shift)
        for v, c in ell2_doubleprime(algebra, w[i], w[j]):
            terms.append(sym_element([v] + rest, shift, sign * c))
    return Element.sum(terms)


def extend_m(algebra: AbAlgebra, w: SymWord) -> Element:
    """m(X_1...X_n) = sum over i of eps D(X_i).X_1...^i...X_n"""
    shift = algebra.a - algebra.b
    terms = []
    for i in range(len(w)):
        sign, rest = _pull_to_front(w, (i,), shift)
        for v, c in D(algebra, w[i]):
            terms.append(sym_element([v] + rest, shift, sign * c))
    return Element.sum(terms)


def Q(algebra: AbAlgebra, w: SymWord) -> Element:
    """The codifferential Q = m + ell''."""
    return extend_m(algebra, w) + extend_ell_doubleprime(algebra, w)


def _taylor(algebra: AbAlgebra, w: SymWord) -> Element:
    """Q_1 = D on one factor, Q_2 = ell''_2 on two factors, Q_k = 0 for k >= 3."""
    if len(w) == 1:
        return D(algebra, w[0]).map(lambda v: Element.basis(SymWord((v,))))
    if len(w) == 2:
        return ell2_doubleprime(algebra, w[0], w[1]).map(lambda v: Element.basis(SymWord((v,))))
    return Element()


def Q_via_taylor(algebra: AbAlgebra, w: SymWord) -> Element:
    """
    Q(X) = sum over I of Q_{#I}(X_I).X_J, read off the coproduct: the split
    with J empty, plus every split X_I # X_J of Delta.
    """
    shift = algebra.a - algebra.b
    terms = [_taylor(algebra, w)]
    for pair, c in coproduct_Delta(w, shift):
        if len(pair.left) > 2:
            continue
        for v, e in _taylor(algebra, pair.left):
            terms.append(sym_element(list(v) + list(pair.right), shift, c * e))
    return Element.sum(terms)


def apply_left(f, v: Element) -> Element:
    """(f (x) id) on pairs."""
    return Element.accumulate(
        (SymPair(x, p.right), c * d) for p, c in v for x, d in f(p.left)
    )


def apply_right(f, v: Element, degree: int, shift: int) -> Element:
    """(id (x) f) on pairs, with the Koszul sign (-1)^{|f| dg''(left)}."""
    return Element.accumulate(
        (SymPair(p.left, y), c * d * sign_of(degree * p.left.degree(shift))) for p, c in v for y, d in f(p.right)
    )


def tau_doubleprime(v: Element, shift: int) -> Element:
    """A # B -> (-1)^{a''b''} B # A"""
    return Element.accumulate(
        (SymPair(p.right, p.left), c * sign_of(p.left.degree(shift) * p.right.degree(shift))) for p, c in v
    )


def tau12_doubleprime(v: Element, shift: int) -> Element:
    return Element.accumulate(
        (SymTriple(t[1], t[0], t[2]), c * sign_of(t[0].degree(shift) * t[1].degree(shift))) for t, c in v
    )


def tau23_doubleprime(v: Element, shift: int) -> Element:
    return Element.accumulate(
        (SymTriple(t[0], t[2], t[1]), c * sign_of(t[1].degree(shift) * t[2].degree(shift))) for t, c in v
    )


def pair_map_left(f, v: Element) -> Element:
    """(f (x) id) from pairs to triples, f producing pairs."""
    return Element.accumulate(
        (SymTriple(q.left, q.right, p.right), c * d) for p, c in v for q, d in f(p.left)
    )


def pair_map_right(f, v: Element, degree: int, shift: int) -> Element:
    """(id (x) f) from pairs to triples, f producing pairs of degree `degree`."""
    return Element.accumulate(
        (SymTriple(p.left, q.left, q.right), c * d * sign_of(degree * p.left.degree(shift)))
        for p, c in v for q, d in f(p.right)
    )


def cobracket_delta_doubleprime(w: SymWord, shift: int) -> Element:
    """
    delta''(X_1...X_n) = sum over s, over I + J = the other factors, over cuts
    X_s = U|V of eps(I, s, J) (-1)^{(a-b)(x''_I + u'')}
    (X_I.U # V.X_J + (-1)^{u''v'' + a-b+1} X_I.V # U.X_J).
    """
    n = len(w)
    degrees = w.degrees(shift)
    terms = []
    for s in range(n):
        others = [k for k in range(n) if k != s]
        for size in range(len(others) + 1):
            for chosen in combinations(others, size):
                rest = [k for k in others if k not in chosen]
                eps = reorder_sign(degrees, list(chosen) + [s] + rest)
                x_i = sum(degrees[k] for k in chosen)
                left = [w[k] for k in chosen]
                right = [w[k] for k in rest]
                for position in range(1, len(w[s])):
                    u, v = w[s].cut(position)
                    u2, v2 = u.degree - shift, v.degree - shift
                    sign = eps * sign_of(shift * (x_i + u2))
                    terms.append(_pair(left + [u], [v] + right, shift, sign))
                    terms.append(_pair(left + [v], [u] + right, shift, sign * sign_of(u2 * v2 + shift + 1)))
    return Element.sum(terms)


def delta_doubleprime_elements(v: Element, shift: int) -> Element:
    return v.map(lambda w: cobracket_delta_doubleprime(w, shift))


def Delta_elements(v: Element, shift: int) -> Element:
    return v.map(lambda w: coproduct_Delta(w, shift))


def symword(*factors: TensorWord, shift: int = 0) -> Element:
    """The canonical Element of the product of the given factors."""
    return sym_element(factors, shift)


__all__ = [
    'SymWord', 'SymPair', 'SymTriple', 'factor_key', 'normalize', 'sym_element', 'symword', 'reduce_sym',
    'reduce_sym_pairs', 'reduce_sym_triples', 'coproduct_Delta', 'extend_ell_doubleprime', 'extend_m', 'Q',
    'Q_via_taylor', 'apply_left', 'apply_right', 'tau_doubleprime', 'tau12_doubleprime', 'tau23_doubleprime',
    'pair_map_left', 'pair_map_right', 'cobracket_delta_doubleprime', 'delta_doubleprime_elements',
    'Delta_elements',
]
