#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
The identity ladder checked by the verifier.

Each Identity evaluates both sides on basis arguments (TensorWords or
SymWords) and returns them in canonical form, so that a record passes iff
the two Elements are equal. Homogeneous Element arguments are handled by
multilinear expansion.
"""

import logging
from itertools import product
from typing import Callable, List, Optional, Sequence, Tuple

from . import ab_core
from .ab_core import AbAlgebra, D_squared, codifferential, compatibility_sides, coderivation_law_sides, ell2, \
    ell2_doubleprime_elements, ell2_elements, ell2_prime_elements
from .freemodule import Element
from .models import Suite
from .oracles import ell2_by_interleaving, gerstenhaber_bracket, kappa, poisson_bracket_on_H, poisson_delta
from .signs import double_prime_degree, prime_degree, sign_of
from .sym_coalgebra import Delta_elements, Q, Q_via_taylor, apply_left, apply_right, \
    coproduct_Delta, cobracket_delta_doubleprime, delta_doubleprime_elements, extend_ell_doubleprime, extend_m, \
    pair_map_left, pair_map_right, reduce_sym, reduce_sym_pairs, reduce_sym_triples, tau12_doubleprime, \
    tau23_doubleprime, tau_doubleprime
from .tensor_coalgebra import TensorWord, cobracket_delta, cojacobi_delta, reduce_mod_shuffles, reduce_pairs, \
    reduce_triples, shuffle, shuffle_elements, tau

logger = logging.getLogger(__name__)

Sides = Tuple[Element, Element]


class Identity:
    """
    :param suite: Suite constant
    :param name: identifier used in reports
    :param statement: the identity in words and symbols
    :param arity: number of arguments
    :param kind: 'word' for TensorWord arguments, 'sym' for SymWord arguments
    :param evaluate: (algebra, *args) -> (lhs, rhs), or (lhs, rhs, note)
    :param applies: predicate on the algebra; identities that do not apply are not run
    :param max_factors: cap on the factor count of enumerated SymWord arguments
    :param max_factor_len: cap on the factor length of enumerated SymWord arguments
    """

    def __init__(self, suite: str, name: str, statement: str, arity: int, kind: str,
                 evaluate: Callable, applies: Optional[Callable[[AbAlgebra], bool]] = None,
                 max_factors: Optional[int] = None, max_factor_len: Optional[int] = None):
        self.suite = suite
        self.name = name
        self.statement = statement
        self.arity = arity
        self.kind = kind
        self.evaluate = evaluate
        self.applies = applies or (lambda algebra: True)
        self.max_factors = max_factors
        self.max_factor_len = max_factor_len

    def __repr__(self):
        return f'<Identity {self.suite}/{self.name}>'

    def evaluate_elements(self, algebra: AbAlgebra, *arguments: Element):
        """Both sides on homogeneous Elements, by multilinear expansion over their terms."""
        lhs, rhs, notes = [], [], set()
        for combination in product(*(list(a) for a in arguments)):
            coefficient = 1
            for _, c in combination:
                coefficient *= c
            result = self.evaluate(algebra, *(basis for basis, _ in combination))
            lhs.append(coefficient * result[0])
            rhs.append(coefficient * result[1])
            if len(result) > 2 and result[2]:
                notes.add(result[2])
        return Element.sum(lhs), Element.sum(rhs), '; '.join(sorted(notes)) or None


def _basis(w) -> Element:
    return Element.basis(w)


def _shift(algebra: AbAlgebra) -> int:
    return algebra.a - algebra.b


def _x1(algebra: AbAlgebra, w: TensorWord) -> int:
    return prime_degree(w.degree, algebra.a, algebra.b)


def _x2(algebra: AbAlgebra, w: TensorWord) -> int:
    return double_prime_degree(w.degree, algebra.a, algebra.b)


def _zero_in_H(v: Element) -> Sides:
    return reduce_mod_shuffles(v), Element()


def _equal_in_H(lhs: Element, rhs: Element) -> Sides:
    return reduce_mod_shuffles(lhs), reduce_mod_shuffles(rhs)


# shuffle algebra

def _shuffle_commutativity(algebra, x, y):
    return shuffle(x, y), sign_of(x.degree * y.degree) * shuffle(y, x)


def _shuffle_associativity(algebra, x, y, z):
    return shuffle_elements(shuffle(x, y), _basis(z)), shuffle_elements(_basis(x), shuffle(y, z))


# cobracket on H

def _delta_coantisymmetry(algebra, x):
    delta = cobracket_delta(x)
    return reduce_pairs(tau(delta)), reduce_pairs(-delta)


def _delta_cojacobi(algebra, x):
    return reduce_triples(cojacobi_delta(x)), Element()


# codifferential on H

def _d_squared(algebra, x):
    value, raw = D_squared(algebra, _basis(x))
    return value, Element(), None if raw else 'vanishes only modulo shuffles'


def _coderivation(algebra, x):
    return coderivation_law_sides(algebra, x)


def _d_preserves_shuffles(algebra, x, y):
    return _zero_in_H(codifferential(algebra, shuffle(x, y)))


# ell_2

def _compatibility(algebra, x, y):
    return compatibility_sides(algebra, x, y)


def _well_defined_left(algebra, x, y, z):
    return _zero_in_H(ell2_elements(algebra, shuffle(x, y), _basis(z)))


def _well_defined_right(algebra, x, y, z):
    return _zero_in_H(ell2_elements(algebra, _basis(z), shuffle(x, y)))


def _ell2_oracle(algebra, x, y):
    return ell2(algebra, x, y), ell2_by_interleaving(algebra, x, y)


# ell'_2: the DGLA

def _prime(algebra, x, y):
    return ell2_prime_elements(algebra, _basis(x) if isinstance(x, TensorWord) else x,
                               _basis(y) if isinstance(y, TensorWord) else y)


def _dgla_antisymmetry(algebra, x, y):
    return _equal_in_H(_prime(algebra, x, y), -sign_of(_x1(algebra, x) * _x1(algebra, y)) * _prime(algebra, y, x))


def _dgla_jacobi(algebra, x, y, z):
    xp, yp, zp = _x1(algebra, x), _x1(algebra, y), _x1(algebra, z)
    total = (sign_of(xp * zp) * _prime(algebra, _prime(algebra, x, y), z)
             + sign_of(yp * xp) * _prime(algebra, _prime(algebra, y, z), x)
             + sign_of(zp * yp) * _prime(algebra, _prime(algebra, z, x), y))
    return _zero_in_H(total)


def _dgla_leibniz(algebra, x, y):
    lhs = codifferential(algebra, _prime(algebra, x, y))
    rhs = (_prime(algebra, codifferential(algebra, _basis(x)), y)
           + sign_of(_x1(algebra, x)) * _prime(algebra, x, codifferential(algebra, _basis(y))))
    return _equal_in_H(lhs, rhs)


# ell''_2: the symmetric bracket of degree 1

def _second(algebra, x, y):
    return ell2_doubleprime_elements(algebra, _basis(x) if isinstance(x, TensorWord) else x,
                                     _basis(y) if isinstance(y, TensorWord) else y)


def _symmetric_symmetry(algebra, x, y):
    return _equal_in_H(_second(algebra, x, y), sign_of(_x2(algebra, x) * _x2(algebra, y)) * _second(algebra, y, x))


def _symmetric_jacobi(algebra, x, y, z):
    xs, ys, zs = _x2(algebra, x), _x2(algebra, y), _x2(algebra, z)
    total = (sign_of(xs * zs) * _second(algebra, _second(algebra, x, y), z)
             + sign_of(ys * xs) * _second(algebra, _second(algebra, y, z), x)
             + sign_of(zs * ys) * _second(algebra, _second(algebra, z, x), y))
    return _zero_in_H(total)


def _symmetric_d(algebra, x, y):
    lhs = codifferential(algebra, _second(algebra, x, y))
    rhs = (-_second(algebra, codifferential(algebra, _basis(x)), y)
           + sign_of(1 + _x2(algebra, x)) * _second(algebra, x, codifferential(algebra, _basis(y))))
    return _equal_in_H(lhs, rhs)


# S+(H[a-b]): coproduct and codifferential

def _on(f, algebra):
    return lambda w: f(algebra, w)


def _Q(algebra, v: Element) -> Element:
    return v.map(_on(Q, algebra))


def _Delta_cocommutativity(algebra, w):
    s = _shift(algebra)
    delta = coproduct_Delta(w, s)
    return reduce_sym_pairs(tau_doubleprime(delta, s), s), reduce_sym_pairs(delta, s)


def _Delta_coassociativity(algebra, w):
    s = _shift(algebra)
    delta = coproduct_Delta(w, s)
    left = pair_map_left(lambda u: coproduct_Delta(u, s), delta)
    right = pair_map_right(lambda u: coproduct_Delta(u, s), delta, 0, s)
    return reduce_sym_triples(left, s), reduce_sym_triples(right, s)


def _Q_squared(algebra, w):
    return reduce_sym(_Q(algebra, Q(algebra, w)), _shift(algebra)), Element()


def _ell_squared(algebra, w):
    f = _on(extend_ell_doubleprime, algebra)
    return reduce_sym(extend_ell_doubleprime(algebra, w).map(f), _shift(algebra)), Element()


def _m_squared(algebra, w):
    f = _on(extend_m, algebra)
    return reduce_sym(extend_m(algebra, w).map(f), _shift(algebra)), Element()


def _Q_coderivation(algebra, w):
    s = _shift(algebra)
    f = _on(Q, algebra)
    delta = coproduct_Delta(w, s)
    lhs = apply_left(f, delta) + apply_right(f, delta, 1, s)
    rhs = Delta_elements(Q(algebra, w), s)
    return reduce_sym_pairs(lhs, s), reduce_sym_pairs(rhs, s)


def _Q_taylor(algebra, w):
    s = _shift(algebra)
    return reduce_sym(Q(algebra, w), s), reduce_sym(Q_via_taylor(algebra, w), s)


# delta''

def _delta2(s):
    return lambda u: cobracket_delta_doubleprime(u, s)


def _delta2_coantisymmetry(algebra, w):
    s = _shift(algebra)
    delta = cobracket_delta_doubleprime(w, s)
    return reduce_sym_pairs(tau_doubleprime(delta, s), s), reduce_sym_pairs(-sign_of(s) * delta, s)


def _delta2_cojacobi(algebra, w):
    s = _shift(algebra)
    inner = pair_map_left(_delta2(s), cobracket_delta_doubleprime(w, s))
    total = inner + tau12_doubleprime(tau23_doubleprime(inner, s), s) + tau23_doubleprime(tau12_doubleprime(inner, s), s)
    return reduce_sym_triples(total, s), Element()


def _delta2_coleibniz(algebra, w):
    s = _shift(algebra)
    lhs = pair_map_right(lambda u: coproduct_Delta(u, s), cobracket_delta_doubleprime(w, s), 0, s)
    delta = coproduct_Delta(w, s)
    rhs = pair_map_left(_delta2(s), delta) + tau12_doubleprime(pair_map_right(_delta2(s), delta, s, s), s)
    return reduce_sym_triples(lhs, s), reduce_sym_triples(rhs, s)


def _twisted(extension):
    def check(algebra, w):
        s = _shift(algebra)
        f = _on(extension, algebra)
        delta = cobracket_delta_doubleprime(w, s)
        lhs = apply_left(f, delta) + apply_right(f, delta, 1, s)
        rhs = sign_of(s) * delta_doubleprime_elements(extension(algebra, w), s)
        return reduce_sym_pairs(lhs, s), reduce_sym_pairs(rhs, s)
    return check


# specializations

def _kappa(algebra, w):
    s = _shift(algebra)
    return reduce_sym_pairs(cobracket_delta_doubleprime(w, s), s), reduce_sym_pairs(kappa(w), s)


def _poisson_delta(algebra, w):
    s = _shift(algebra)
    return reduce_sym_pairs(cobracket_delta_doubleprime(w, s), s), reduce_sym_pairs(poisson_delta(w), s)


def _gerstenhaber(algebra, x, y):
    return _equal_in_H(ell2(algebra, x, y), gerstenhaber_bracket(algebra, x, y))


def _poisson_bracket(algebra, x, y):
    return _equal_in_H(ab_core.ell2_prime(algebra, x, y), poisson_bracket_on_H(algebra, x, y))


def _is(a, b):
    return lambda algebra: (algebra.a, algebra.b) == (a, b)


LADDER: List[Identity] = [
    Identity(Suite.SHUFFLE, 'shuffle commutativity', 'bat(x, y) = (-1)^{xy} bat(y, x)', 2, 'word',
             _shuffle_commutativity),
    Identity(Suite.SHUFFLE, 'shuffle associativity', 'bat(bat(x, y), z) = bat(x, bat(y, z))', 3, 'word',
             _shuffle_associativity),
    Identity(Suite.COBRACKET, 'delta coantisymmetry', 'tau o delta = -delta in H # H', 1, 'word',
             _delta_coantisymmetry),
    Identity(Suite.COBRACKET, 'delta cojacobi', '(id + tau12 tau23 + tau23 tau12)(delta # id) delta = 0', 1, 'word',
             _delta_cojacobi),
    Identity(Suite.CODIFFERENTIAL, 'D squared', 'D o D = 0', 1, 'word', _d_squared),
    Identity(Suite.CODIFFERENTIAL, 'D coderivation', '(D # id + id # D) o delta = delta o D', 1, 'word',
             _coderivation),
    Identity(Suite.CODIFFERENTIAL, 'D preserves shuffles', 'D(bat(x, y)) = 0 in H', 2, 'word',
             _d_preserves_shuffles),
    Identity(Suite.BRACKET, 'ell2 compatibility', 'delta o ell2 = (ell2 # id)(tau23 (delta # id) + id # delta) '
             '+ (id # ell2)(delta # id + tau12 (id # delta))', 2, 'word', _compatibility),
    Identity(Suite.BRACKET, 'ell2 well defined left', 'ell2(bat(x, y), z) = 0 in H', 3, 'word', _well_defined_left),
    Identity(Suite.BRACKET, 'ell2 well defined right', 'ell2(z, bat(x, y)) = 0 in H', 3, 'word',
             _well_defined_right),
    Identity(Suite.BRACKET, 'ell2 interleaving oracle', 'ell2 equals the recursive interleaving evaluator', 2,
             'word', _ell2_oracle),
    Identity(Suite.DGLA, "ell2' antisymmetry", "ell2'(X, Y) = -(-1)^{x'y'} ell2'(Y, X)", 2, 'word',
             _dgla_antisymmetry),
    Identity(Suite.DGLA, "ell2' jacobi", "(-1)^{x'z'} ell2'(ell2'(X, Y), Z) + cyclic = 0", 3, 'word', _dgla_jacobi),
    Identity(Suite.DGLA, "ell2' leibniz", "D ell2'(X, Y) = ell2'(DX, Y) + (-1)^{x'} ell2'(X, DY)", 2, 'word',
             _dgla_leibniz),
    Identity(Suite.SYMMETRIC, "ell2'' symmetry", "ell2''(X, Y) = (-1)^{x''y''} ell2''(Y, X)", 2, 'word',
             _symmetric_symmetry),
    Identity(Suite.SYMMETRIC, "ell2'' jacobi", "(-1)^{x''z''} ell2''(ell2''(X, Y), Z) + cyclic = 0", 3, 'word',
             _symmetric_jacobi),
    Identity(Suite.SYMMETRIC, "ell2'' differential", "D ell2''(X, Y) = -ell2''(DX, Y) + (-1)^{1+x''} ell2''(X, DY)",
             2, 'word', _symmetric_d),
    Identity(Suite.ENVELOPE, 'Delta cocommutativity', "tau'' o Delta = Delta", 1, 'sym', _Delta_cocommutativity),
    Identity(Suite.ENVELOPE, 'Delta coassociativity', '(Delta # id) Delta = (id # Delta) Delta', 1, 'sym',
             _Delta_coassociativity),
    Identity(Suite.ENVELOPE, 'Q squared', 'Q o Q = 0', 1, 'sym', _Q_squared),
    Identity(Suite.ENVELOPE, "ell'' squared", "ell'' o ell'' = 0", 1, 'sym', _ell_squared),
    Identity(Suite.ENVELOPE, 'm squared', 'm o m = 0', 1, 'sym', _m_squared),
    Identity(Suite.ENVELOPE, 'Q coderivation', '(Q # id + id # Q) o Delta = Delta o Q', 1, 'sym', _Q_coderivation),
    Identity(Suite.ENVELOPE, 'Q taylor', 'm + ell\'\' = sum of Q_{#I}(X_I).X_J', 1, 'sym', _Q_taylor),
    Identity(Suite.COBRACKET_DOUBLEPRIME, "delta'' coantisymmetry", "tau'' o delta'' = -(-1)^{a-b} delta''", 1,
             'sym', _delta2_coantisymmetry, max_factors=3),
    Identity(Suite.COBRACKET_DOUBLEPRIME, "delta'' cojacobi",
             "(id + tau''12 tau''23 + tau''23 tau''12)(delta'' # id) delta'' = 0", 1, 'sym', _delta2_cojacobi,
             max_factors=2, max_factor_len=2),
    Identity(Suite.COBRACKET_DOUBLEPRIME, "delta'' coleibniz",
             "(id # Delta) delta'' = (delta'' # id) Delta + tau''12 (id # delta'') Delta", 1, 'sym',
             _delta2_coleibniz, max_factors=3),
    Identity(Suite.COBRACKET_DOUBLEPRIME, "m twisted coderivation",
             "(m # id + id # m) delta'' = (-1)^{a-b} delta'' m", 1, 'sym', _twisted(extend_m), max_factors=2),
    Identity(Suite.COBRACKET_DOUBLEPRIME, "ell'' twisted coderivation",
             "(ell'' # id + id # ell'') delta'' = (-1)^{a-b} delta'' ell''", 1, 'sym',
             _twisted(extend_ell_doubleprime), max_factors=2),
    Identity(Suite.SPECIALIZATION, 'kappa', "delta'' equals the Gerstenhaber cobracket kappa when a-b = 1", 1,
             'sym', _kappa, applies=lambda algebra: algebra.a - algebra.b == 1, max_factors=2, max_factor_len=2),
    Identity(Suite.SPECIALIZATION, 'poisson delta', "delta'' equals the Poisson cobracket on S+(H) when a-b = 0", 1,
             'sym', _poisson_delta, applies=lambda algebra: algebra.a - algebra.b == 0, max_factors=2,
             max_factor_len=2),
    Identity(Suite.SPECIALIZATION, 'gerstenhaber bracket', 'ell2 equals the bracket [X, Y] of G[1] at (0,-1)', 2,
             'word', _gerstenhaber, applies=_is(0, -1)),
    Identity(Suite.SPECIALIZATION, 'poisson bracket', "ell2' equals {X, Y} at (0,0)", 2, 'word', _poisson_bracket,
             applies=_is(0, 0)),
]


def ladder(suites: Sequence[str], algebra: AbAlgebra) -> List[Identity]:
    """The identities of the selected suites that apply to the algebra, in ladder order."""
    return [i for i in LADDER if i.suite in suites and i.applies(algebra)]


__all__ = ['Identity', 'LADDER', 'ladder']
