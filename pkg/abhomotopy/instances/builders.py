#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Truncated AbAlgebras built from the polynomial instances.

Generators are the basis monomials within the truncation bounds, named by
their written form ("x1^2*xi1*dx1", "1", ...). Structure constants are
computed on demand; results leaving the basis raise TruncationOverflow.
"""

import logging
from itertools import product
from typing import Callable, Dict, List, Optional, Sequence

from ..ab_core import AbAlgebra, StructureTable
from ..exceptions import ConfigError
from ..freemodule import Element
from ..models import IdentityRecord, Status
from .poisson import PoissonRing, build_tensor, check_poisson_tensor, derivation_defect, poisson_bracket
from .polyvector import PolyvectorRing, schouten, vector_field_commutator, wedge
from .superalgebra import Monomial, SuperRing, Variable

logger = logging.getLogger(__name__)

Operation = Callable[[Element, Element], Element]


def ring_algebra(ring: SuperRing, basis: Sequence[Monomial], a: int, b: int, bracket: Optional[Operation] = None,
                 differential: Optional[Callable[[Element], Element]] = None, name: str = 'custom',
                 params: Optional[dict] = None, invariants=None) -> AbAlgebra:
    """
    AbAlgebra on the given monomial basis with the ring product, a bracket
    and a differential acting on polynomials.
    """
    by_name = {ring.name(m): m for m in basis}
    generators = {n: ring.degree(m) for n, m in by_name.items()}

    def lift(f: Element) -> Dict[str, object]:
        return {ring.name(m): c for m, c in f}

    def product_rule(key):
        left, right = key
        return lift(ring.multiply(Element.basis(by_name[left]), Element.basis(by_name[right])))

    def bracket_rule(key):
        left, right = key
        return lift(bracket(Element.basis(by_name[left]), Element.basis(by_name[right])))

    def differential_rule(key):
        return lift(differential(Element.basis(by_name[key])))

    algebra = AbAlgebra(
        a, b, generators,
        product=StructureTable(rule=product_rule),
        bracket=StructureTable(rule=bracket_rule if bracket else None),
        differential=StructureTable(rule=differential_rule if differential else None),
        name=name,
        params=params,
        invariants=invariants,
    )
    logger.debug(f'{name}: {len(generators)} generators, (a,b)=({a},{b})')
    return algebra


def _record(identity: str, instance: str, lhs: Element, rhs: Element, ring: SuperRing, statement: str):
    if lhs == rhs:
        return IdentityRecord(identity=identity, instance=instance, status=Status.PASS, statement=statement)
    return IdentityRecord(identity=identity, instance=instance, status=Status.FAIL, statement=statement,
                          lhs=ring.format(lhs), rhs=ring.format(rhs))


def _polyvector_invariants(ring: PolyvectorRing, basis: Sequence[Monomial]):
    """Schouten against the vector-field commutator on every pair of basis vector fields."""
    fields = [m for m in basis if ring.rank(m) == 1]

    def invariants() -> List[IdentityRecord]:
        records = []
        for m1, m2 in product(fields, repeat=2):
            x, y = Element.basis(m1), Element.basis(m2)
            records.append(_record('schouten on vector fields', f'({ring.name(m1)}, {ring.name(m2)})',
                                   schouten(ring, x, y), vector_field_commutator(ring, x, y), ring,
                                   'schouten agrees with the commutator of derivations'))
        return records

    return invariants


def _poisson_invariants(tensor, basis: Sequence[Monomial]):
    ring = tensor.ring

    def invariants() -> List[IdentityRecord]:
        records = []
        for r in check_poisson_tensor(tensor).records:
            r.suite = 'poisson-tensor'
            records.append(r)
        for i in range(len(ring.variables)):
            for m1, m2 in product(basis, repeat=2):
                f, g = Element.basis(m1), Element.basis(m2)
                records.append(_record('derivation property', f'd_{ring.variables[i].name}({ring.name(m1)}, '
                                                               f'{ring.name(m2)})',
                                       derivation_defect(ring, i, f, g), Element(), ring,
                                       'd_i(fg) = d_i(f) g + (-1)^{|d_i||f|} f d_i(g)'))
        return records

    return invariants


def build_example1(d: int = 2, max_poly_degree: int = 2, max_rank: int = 2) -> AbAlgebra:
    """
    Polyvector fields on R^d with |x^m dx^k| = 2m + k: a (0,-3)-algebra
    under wedge and Schouten, with d = 0.
    """
    ring = PolyvectorRing(d, 0, x_degree=2, b=-3)
    basis = ring.basis(max_poly_degree, max_rank)
    return ring_algebra(ring, basis, 0, -3, bracket=lambda x, y: schouten(ring, x, y), name='example1',
                        params={'d': d, 'max_poly_degree': max_poly_degree, 'max_rank': max_rank},
                        invariants=_polyvector_invariants(ring, basis))


def _omega_for_example2(m: int) -> str:
    presets = {0: 'symplectic', 1: 'lie_poisson', 2: 'quadratic'}
    if m not in presets:
        raise ConfigError(f'no builtin omega of coefficient degree {m}; use one of {sorted(presets)}')
    return presets[m]


def build_example2(d: int = 2, m: int = 0, omega: Optional[str] = None, max_poly_degree: int = 2) -> AbAlgebra:
    """
    Polynomial Poisson algebra on R^d, |f| = 2k, with omega of polynomial
    degree m: a (0, 2m-4)-algebra.
    """
    ring = PoissonRing(d, 0)
    tensor = build_tensor(ring, omega or _omega_for_example2(m))
    if tensor.m != 2 * m - 4:
        raise ConfigError(f'omega {tensor.name!r} has bracket degree {tensor.m}, expected {2 * m - 4}')
    basis = ring.basis(max_poly_degree)
    return ring_algebra(ring, basis, 0, tensor.m, bracket=lambda f, g: poisson_bracket(tensor, f, g),
                        name='example2',
                        params={'d': d, 'm': m, 'omega': tensor.name, 'max_poly_degree': max_poly_degree},
                        invariants=_poisson_invariants(tensor, basis))


def build_example3(p: int = 1, q: int = 1, max_poly_degree: int = 1, max_rank: int = 1) -> AbAlgebra:
    """T_poly(R^{p|q}) with |x|=2, |xi|=1, |dx|=-3, |dxi|=-2: a (0,1)-algebra."""
    ring = PolyvectorRing(p, q, x_degree=2, xi_degree=1, b=1)
    basis = ring.basis(max_poly_degree, max_rank)
    return ring_algebra(ring, basis, 0, 1, bracket=lambda x, y: schouten(ring, x, y), name='example3',
                        params={'p': p, 'q': q, 'max_poly_degree': max_poly_degree, 'max_rank': max_rank},
                        invariants=_polyvector_invariants(ring, basis))


def build_example4(p: int = 2, q: int = 1, m: Optional[int] = None, omega: str = 'symplectic',
                   max_poly_degree: int = 2) -> AbAlgebra:
    """S(R^{p|q}) with a super-Poisson tensor of degree m: a (0,m)-algebra."""
    ring = PoissonRing(p, q)
    tensor = build_tensor(ring, omega, m)
    basis = ring.basis(max_poly_degree)
    return ring_algebra(ring, basis, 0, tensor.m, bracket=lambda f, g: poisson_bracket(tensor, f, g),
                        name='example4',
                        params={'p': p, 'q': q, 'm': tensor.m, 'omega': tensor.name,
                                'max_poly_degree': max_poly_degree},
                        invariants=_poisson_invariants(tensor, basis))


def build_gerstenhaber(d: int = 2, max_poly_degree: int = 1, max_rank: int = 2) -> AbAlgebra:
    """T_poly(R^d) with |x| = 0 and |dx| = 1: a Gerstenhaber algebra, (a,b) = (0,-1)."""
    ring = PolyvectorRing(d, 0, x_degree=0, b=-1)
    basis = ring.basis(max_poly_degree, max_rank)
    return ring_algebra(ring, basis, 0, -1, bracket=lambda x, y: schouten(ring, x, y), name='gerstenhaber',
                        params={'d': d, 'max_poly_degree': max_poly_degree, 'max_rank': max_rank},
                        invariants=_polyvector_invariants(ring, basis))


def build_de_rham(max_poly_degree: int = 3) -> AbAlgebra:
    """
    Polynomial forms Q[x] (x) Lambda(dx), |x| = 0 and |dx| = 1, with the
    de Rham differential and the zero bracket: (a,b) = (0,0).
    """
    ring = SuperRing([Variable('x', 0), Variable('dx', 1)])
    if max_poly_degree < 1:
        raise ConfigError('truncation bounds must be >= 1')
    basis = ring.monomials({(0,): max_poly_degree, (1,): 1})
    dx = Element.basis(ring.variable('dx'))

    def de_rham(f: Element) -> Element:
        return ring.multiply(ring.left_derivative(0, f), dx)

    return ring_algebra(ring, basis, 0, 0, differential=de_rham, name='de_rham',
                        params={'max_poly_degree': max_poly_degree})


BUILTINS = {
    'example1': build_example1,
    'example2': build_example2,
    'example3': build_example3,
    'example4': build_example4,
    'gerstenhaber': build_gerstenhaber,
    'de_rham': build_de_rham,
}


def build_builtin(name: str, params: Optional[dict] = None) -> AbAlgebra:
    """
    :param name: a key of BUILTINS
    :param params: keyword arguments of the builder
    :return: the truncated AbAlgebra
    """
    try:
        builder = BUILTINS[name]
    except KeyError:
        raise ConfigError(f'unknown builtin algebra {name!r}; choose from {", ".join(sorted(BUILTINS))}') from None
    try:
        return builder(**(params or {}))
    except TypeError as e:
        raise ConfigError(f'bad parameters for {name}: {e}') from None


__all__ = ['ring_algebra', 'build_example1', 'build_example2', 'build_example3', 'build_example4',
           'build_gerstenhaber', 'build_de_rham', 'BUILTINS', 'build_builtin']
