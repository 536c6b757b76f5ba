#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Super-Poisson brackets on S(R^{p|q}) given by a tensor omega^{ij}.

Coordinates are x_1..x_p of degree 2 and xi_1..xi_q of degree 1, so
|d_i| = -|z_i|. The bracket has degree m and is
{f, g} = (-1)^{m|f|} sum_{i,j} (-1)^{|d_j|(|f|+|d_i|)} omega^{ij} d_i(f) d_j(g)
with left derivatives.
"""

import logging
from itertools import product
from typing import Dict, Optional, Tuple

from ..exceptions import ConfigError, ContractViolation
from ..freemodule import Element, bilinear, to_scalar
from ..models import AxiomReport, IdentityRecord, Status
from ..signs import sign_of
from .superalgebra import Monomial, SuperRing, Variable

logger = logging.getLogger(__name__)


class PoissonRing(SuperRing):

    def __init__(self, p: int, q: int = 0, x_degree: int = 2, xi_degree: int = 1):
        if p < 0 or q < 0 or p + q == 0:
            raise ContractViolation(f'need at least one coordinate, got p={p} q={q}')
        self.p, self.q = p, q
        variables = [Variable(f'x{i}', x_degree) for i in range(1, p + 1)]
        variables += [Variable(f'xi{j}', xi_degree) for j in range(1, q + 1)]
        super().__init__(variables)

    def derivative_degree(self, i: int) -> int:
        return -self.variables[i].degree

    def basis(self, max_poly_degree: int):
        if max_poly_degree < 1:
            raise ContractViolation('truncation bounds must be >= 1')
        return self.monomials({tuple(range(len(self.variables))): max_poly_degree})


class PoissonTensor:
    """
    :param ring: the coordinate ring
    :param m: degree of the bracket
    :param omega: {(i, j): polynomial} on 0-based coordinate indices; absent entries are zero
    """

    def __init__(self, ring: PoissonRing, m: int, omega: Dict[Tuple[int, int], Element], name: str = 'custom'):
        self.ring = ring
        self.m = m
        self.omega = {k: v for k, v in omega.items() if v}
        self.name = name

    def __repr__(self):
        return "<{klass} @{id:x} {attrs}>".format(
            klass=self.__class__.__name__,
            id=id(self) & 0xFFFFFF,
            attrs=f'name={self.name!r} m={self.m} entries={len(self.omega)}',
        )

    def entry(self, i: int, j: int) -> Element:
        return self.omega.get((i, j), Element())

    def size(self) -> int:
        return len(self.ring.variables)


def _bracket_monomials(tensor: PoissonTensor, m1: Monomial, m2: Monomial) -> Element:
    ring = tensor.ring
    f, g = Element.basis(m1), Element.basis(m2)
    f_degree = ring.degree(m1)
    terms = []
    for (i, j), w in tensor.omega.items():
        di_f = ring.left_derivative(i, f)
        if not di_f:
            continue
        dj_g = ring.left_derivative(j, g)
        if not dj_g:
            continue
        sign = sign_of(ring.derivative_degree(j) * (f_degree + ring.derivative_degree(i)))
        terms.append(sign * ring.multiply(w, ring.multiply(di_f, dj_g)))
    return sign_of(tensor.m * f_degree) * Element.sum(terms)


def poisson_bracket(tensor: PoissonTensor, f: Element, g: Element) -> Element:
    return bilinear(lambda m1, m2: _bracket_monomials(tensor, m1, m2), f, g)


def _record(identity: str, instance: str, value: Element, ring: SuperRing, statement: str) -> IdentityRecord:
    if not value:
        return IdentityRecord(identity=identity, instance=instance, status=Status.PASS, statement=statement)
    return IdentityRecord(identity=identity, instance=instance, status=Status.FAIL, statement=statement,
                          lhs=ring.format(value), rhs='0')


def check_poisson_tensor(tensor: PoissonTensor) -> AxiomReport:
    """
    Homogeneity, graded symmetry and the cyclic Jacobi condition of omega,
    each evaluated exactly; failures carry the offending indices.
    """
    ring, m, n = tensor.ring, tensor.m, tensor.size()
    dd = ring.derivative_degree
    report = AxiomReport(algebra=tensor.name)

    for (i, j), w in sorted(tensor.omega.items()):
        expected = m - dd(i) - dd(j)
        wrong = Element.accumulate((mono, c) for mono, c in w if ring.degree(mono) != expected)
        report.records.append(_record('omega homogeneity', f'({i + 1}, {j + 1})', wrong, ring,
                                      f'|omega^ij| + |d_i| + |d_j| = {m}'))

    for i, j in product(range(n), repeat=2):
        if i > j:
            continue
        value = tensor.entry(i, j) - sign_of(dd(i) * dd(j) + m + 1) * tensor.entry(j, i)
        report.records.append(_record('omega graded symmetry', f'({i + 1}, {j + 1})', value, ring,
                                      'omega^ij = (-1)^{|d_i||d_j|+m+1} omega^ji'))

    def cyclic(i, j, l):
        terms = []
        for k in range(n):
            terms.append(sign_of(dd(l) * (m + dd(i))) * ring.multiply(tensor.entry(l, k),
                                                                      ring.left_derivative(k, tensor.entry(j, i))))
            terms.append(sign_of(dd(j) * (m + dd(l))) * ring.multiply(tensor.entry(j, k),
                                                                      ring.left_derivative(k, tensor.entry(i, l))))
            terms.append(sign_of(dd(i) * (m + dd(j))) * ring.multiply(tensor.entry(i, k),
                                                                      ring.left_derivative(k, tensor.entry(l, j))))
        return Element.sum(terms)

    for i, j, l in product(range(n), repeat=3):
        report.records.append(_record('omega jacobi', f'({i + 1}, {j + 1}, {l + 1})', cyclic(i, j, l), ring,
                                      'cyclic sum of omega^lk d_k omega^ji = 0'))

    if not report.valid:
        logger.warning(f'{tensor.name}: omega fails {len(report.failures())} conditions')
    return report


def omega_preset(ring: PoissonRing, preset: str) -> Tuple[int, Dict[Tuple[int, int], Element]]:
    """
    Named tensors and the bracket degree they are homogeneous for.
    :return: (m, omega)
    """
    one = lambda c=1: Element.basis(ring.one, to_scalar(c))
    var = lambda i, c=1: Element.basis(ring.variable(ring.variables[i].name), to_scalar(c))
    p, q = ring.p, ring.q
    omega = {}
    if preset == 'zero':
        return -4, omega
    if preset == 'symplectic':
        # omega^{x_{2k-1} x_{2k}} = 1, antisymmetric
        for k in range(0, p - 1, 2):
            omega[(k, k + 1)] = one()
            omega[(k + 1, k)] = one(-1)
        return -4, omega
    if preset == 'symmetric':
        for k in range(0, p - 1, 2):
            omega[(k, k + 1)] = one()
            omega[(k + 1, k)] = one()
        return -4, omega
    if preset == 'odd':
        # omega^{xi_j xi_j} = 1, symmetric in the odd directions
        for j in range(p, p + q):
            omega[(j, j)] = one()
        return -2, omega
    if preset == 'lie_poisson':
        if p < 3:
            raise ConfigError('lie_poisson needs p >= 3')
        # so(3): omega^{ij} = eps_ijk x_k
        for i, j, k in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
            omega[(i, j)] = var(k)
            omega[(j, i)] = var(k, -1)
        return -2, omega
    if preset == 'quadratic':
        if p < 2:
            raise ConfigError('quadratic needs p >= 2')
        x1x2 = ring.multiply(var(0), var(1))
        omega[(0, 1)] = x1x2
        omega[(1, 0)] = -x1x2
        return 0, omega
    if preset == 'broken_jacobi':
        if p < 3:
            raise ConfigError('broken_jacobi needs p >= 3')
        omega[(0, 1)] = var(2)
        omega[(1, 0)] = var(2, -1)
        omega[(1, 2)] = var(1)
        omega[(2, 1)] = var(1, -1)
        return -2, omega
    raise ConfigError(f'unknown omega preset {preset!r}')


def build_tensor(ring: PoissonRing, preset: str, m: Optional[int] = None) -> PoissonTensor:
    natural, omega = omega_preset(ring, preset)
    return PoissonTensor(ring, natural if m is None else m, omega, name=preset)


def derivation_defect(ring: SuperRing, i: int, f: Element, g: Element) -> Element:
    """d_i(f g) - d_i(f) g - (-1)^{|d_i||f|} f d_i(g) for homogeneous f."""
    sign = sign_of(ring.variables[i].degree * ring.element_degree(f))
    return (ring.left_derivative(i, ring.multiply(f, g)) - ring.multiply(ring.left_derivative(i, f), g)
            - sign * ring.multiply(f, ring.left_derivative(i, g)))


__all__ = ['PoissonRing', 'PoissonTensor', 'poisson_bracket', 'check_poisson_tensor', 'omega_preset',
           'build_tensor', 'derivation_defect']
