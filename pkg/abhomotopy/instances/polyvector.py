#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Polyvector fields on R^{p|q} with polynomial coefficients.

Derivations are polynomial variables of their own: dx_i for d/dx_i and
dxi_j for d/dxi_j, placed after every coordinate in the variable order. With
coordinate degrees |x|, |xi| and bracket degree b, |dx_i| = -b - |x| and
|dxi_j| = -b - |xi|; b odd makes dx_i odd and dxi_j even for even x_i and
odd xi_j. The wedge product is the supercommutative product of this ring,
and the Schouten bracket is the biderivation pairing each derivation with
its coordinate.
"""

import logging
from typing import List, Tuple

from ..exceptions import ContractViolation
from ..freemodule import Element, bilinear
from ..signs import sign_of
from .superalgebra import Monomial, SuperRing, Variable

logger = logging.getLogger(__name__)


class PolyvectorRing(SuperRing):
    """
    :param p: number of even coordinates x_i
    :param q: number of odd coordinates xi_j
    :param x_degree: |x_i|
    :param xi_degree: |xi_j|
    :param b: degree of the Schouten bracket
    """

    def __init__(self, p: int, q: int = 0, x_degree: int = 2, xi_degree: int = 1, b: int = 1):
        if p < 0 or q < 0 or p + q == 0:
            raise ContractViolation(f'need at least one coordinate, got p={p} q={q}')
        self.p, self.q, self.b = p, q, b
        variables = [Variable(f'x{i}', x_degree) for i in range(1, p + 1)]
        variables += [Variable(f'xi{j}', xi_degree) for j in range(1, q + 1)]
        variables += [Variable(f'dx{i}', -b - x_degree) for i in range(1, p + 1)]
        variables += [Variable(f'dxi{j}', -b - xi_degree) for j in range(1, q + 1)]
        super().__init__(variables)
        n = p + q
        # (derivation index, coordinate index)
        self.pairs: List[Tuple[int, int]] = [(n + k, k) for k in range(n)]

    @property
    def coordinate_indices(self) -> range:
        return range(self.p + self.q)

    @property
    def derivation_indices(self) -> range:
        return range(self.p + self.q, 2 * (self.p + self.q))

    def rank(self, m: Monomial) -> int:
        return sum(m[i] for i in self.derivation_indices)

    def coefficient_degree(self, m: Monomial) -> int:
        return sum(m[i] for i in self.coordinate_indices)

    def basis(self, max_poly_degree: int, max_rank: int) -> List[Monomial]:
        if max_poly_degree < 1 or max_rank < 1:
            raise ContractViolation('truncation bounds must be >= 1')
        return self.monomials({tuple(self.coordinate_indices): max_poly_degree,
                               tuple(self.derivation_indices): max_rank})


def wedge(ring: PolyvectorRing, alpha: Element, beta: Element) -> Element:
    return ring.multiply(alpha, beta)


def bullet(ring: PolyvectorRing, alpha: Element, beta: Element) -> Element:
    """alpha . beta = sum over coordinates z of (alpha d/d(dz) from the right)(d/dz beta from the left)"""
    terms = []
    for derivation, coordinate in ring.pairs:
        left = ring.right_derivative(derivation, alpha)
        if not left:
            continue
        right = ring.left_derivative(coordinate, beta)
        if right:
            terms.append(ring.multiply(left, right))
    return Element.sum(terms)


def _schouten_monomials(ring: PolyvectorRing, m1: Monomial, m2: Monomial) -> Element:
    f, g = ring.degree(m1), ring.degree(m2)
    alpha, beta = Element.basis(m1), Element.basis(m2)
    return bullet(ring, alpha, beta) - sign_of((f + ring.b) * (g + ring.b)) * bullet(ring, beta, alpha)


def schouten(ring: PolyvectorRing, alpha: Element, beta: Element) -> Element:
    """
    [alpha, beta] = alpha . beta - (-1)^{(|alpha|+b)(|beta|+b)} beta . alpha,
    extended bilinearly over monomials.
    """
    return bilinear(lambda m1, m2: _schouten_monomials(ring, m1, m2), alpha, beta)


def _vector_field(ring: PolyvectorRing, field: Element) -> List[Tuple[int, Element]]:
    """Split a rank-one polyvector into (coordinate index, coefficient) pairs."""
    components = {}
    for m, c in field:
        if ring.rank(m) != 1:
            raise ContractViolation(f'{ring.name(m)} is not a vector field')
        derivation = next(i for i in ring.derivation_indices if m[i])
        coordinate = derivation - (ring.p + ring.q)
        coefficient = m[:derivation] + (0,) + m[derivation + 1:]
        components.setdefault(coordinate, []).append((coefficient, c))
    return [(k, Element.accumulate(v)) for k, v in sorted(components.items())]


def act(ring: PolyvectorRing, field: Element, g: Element) -> Element:
    """X(g) = sum f_z d/dz g, derivatives from the left."""
    return Element.sum(ring.multiply(f, ring.left_derivative(z, g)) for z, f in _vector_field(ring, field))


def vector_field_commutator(ring: PolyvectorRing, x: Element, y: Element) -> Element:
    """
    The graded commutator of two homogeneous vector fields evaluated on the
    coordinates, C(z) = X(Y z) - (-1)^{(|X|+b)(|Y|+b)} Y(X z), returned as
    the polyvector sum of C(z) dz.
    """
    sign = sign_of((ring.element_degree(x) + ring.b) * (ring.element_degree(y) + ring.b))
    terms = []
    for derivation, z in ring.pairs:
        coordinate = Element.basis(ring.variable(ring.variables[z].name))
        value = act(ring, x, act(ring, y, coordinate)) - sign * act(ring, y, act(ring, x, coordinate))
        terms.append(ring.multiply(value, Element.basis(ring.variable(ring.variables[derivation].name))))
    return Element.sum(terms)


__all__ = ['PolyvectorRing', 'wedge', 'bullet', 'schouten', 'act', 'vector_field_commutator']
