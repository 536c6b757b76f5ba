#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Graded supercommutative polynomial rings on finitely many variables.

A monomial is a tuple of exponents in the ring's variable order; odd
variables carry exponent 0 or 1. The written form of a monomial lists its
variables in that order, which fixes its sign.
"""

import logging
from itertools import product
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple

from ..exceptions import ContractViolation
from ..freemodule import Element
from ..signs import sign_of

logger = logging.getLogger(__name__)

Monomial = Tuple[int, ...]


class Variable(NamedTuple):
    name: str
    degree: int

    @property
    def odd(self) -> bool:
        return bool(self.degree & 1)


class SuperRing:
    """
    :param variables: the generators in their canonical order
    """

    def __init__(self, variables: Sequence[Variable]):
        self.variables = tuple(variables)
        self.index = {v.name: i for i, v in enumerate(self.variables)}
        if len(self.index) != len(self.variables):
            raise ContractViolation('variable names must be distinct')

    def __repr__(self):
        return "<{klass} @{id:x} {attrs}>".format(
            klass=self.__class__.__name__,
            id=id(self) & 0xFFFFFF,
            attrs=' '.join(f'{v.name}:{v.degree}' for v in self.variables),
        )

    @property
    def one(self) -> Monomial:
        return (0,) * len(self.variables)

    def variable(self, name: str) -> Monomial:
        exponents = [0] * len(self.variables)
        exponents[self.index[name]] = 1
        return tuple(exponents)

    def degree(self, m: Monomial) -> int:
        return sum(e * v.degree for e, v in zip(m, self.variables))

    def element_degree(self, f: Element) -> int:
        """Degree of a homogeneous polynomial; 0 for the zero polynomial."""
        if not f:
            return 0
        return self.degree(f.leading()[0])

    def is_valid(self, m: Monomial) -> bool:
        return all(e >= 0 and (e <= 1 or not v.odd) for e, v in zip(m, self.variables))

    def name(self, m: Monomial) -> str:
        parts = []
        for e, v in zip(m, self.variables):
            if e == 1:
                parts.append(v.name)
            elif e > 1:
                parts.append(f'{v.name}^{e}')
        return '*'.join(parts) or '1'

    def parse(self, name: str) -> Monomial:
        exponents = [0] * len(self.variables)
        if name.strip() == '1':
            return tuple(exponents)
        for part in name.split('*'):
            base, _, power = part.strip().partition('^')
            if base not in self.index:
                raise ContractViolation(f'unknown variable {base!r} in {name!r}')
            exponents[self.index[base]] += int(power) if power else 1
        m = tuple(exponents)
        if not self.is_valid(m):
            raise ContractViolation(f'odd variables square to zero: {name!r}')
        return m

    def multiply_monomials(self, m1: Monomial, m2: Monomial) -> Tuple[int, Optional[Monomial]]:
        """
        m1 * m2 brought to canonical order.
        :return: (sign, monomial), (0, None) when an odd variable repeats
        """
        swaps = 0
        odd_after = 0
        # walk from the last variable: odd letters of m2 move left past odd letters of m1 behind them
        for i in range(len(self.variables) - 1, -1, -1):
            if not self.variables[i].odd:
                continue
            if m1[i] and m2[i]:
                return 0, None
            if m2[i]:
                swaps += odd_after
            if m1[i]:
                odd_after += 1
        return sign_of(swaps), tuple(a + b for a, b in zip(m1, m2))

    def multiply(self, f: Element, g: Element) -> Element:
        terms = []
        for m1, c in f:
            for m2, d in g:
                sign, m = self.multiply_monomials(m1, m2)
                if sign:
                    terms.append((m, sign * c * d))
        return Element.accumulate(terms)

    def _odd_before(self, m: Monomial, i: int) -> int:
        return sum(1 for k in range(i) if m[k] and self.variables[k].odd)

    def _odd_after(self, m: Monomial, i: int) -> int:
        return sum(1 for k in range(i + 1, len(m)) if m[k] and self.variables[k].odd)

    def left_derivative_monomial(self, i: int, m: Monomial) -> Tuple[int, Optional[Monomial]]:
        """d/dz_i acting from the left; an odd z_i first moves to the front."""
        if not m[i]:
            return 0, None
        reduced = m[:i] + (m[i] - 1,) + m[i + 1:]
        if self.variables[i].odd:
            return sign_of(self._odd_before(m, i)), reduced
        return m[i], reduced

    def right_derivative_monomial(self, i: int, m: Monomial) -> Tuple[int, Optional[Monomial]]:
        """d/dz_i acting from the right; an odd z_i first moves to the back."""
        if not m[i]:
            return 0, None
        reduced = m[:i] + (m[i] - 1,) + m[i + 1:]
        if self.variables[i].odd:
            return sign_of(self._odd_after(m, i)), reduced
        return m[i], reduced

    def left_derivative(self, i: int, f: Element) -> Element:
        return self._derive(self.left_derivative_monomial, i, f)

    def right_derivative(self, i: int, f: Element) -> Element:
        return self._derive(self.right_derivative_monomial, i, f)

    @staticmethod
    def _derive(rule, i: int, f: Element) -> Element:
        terms = []
        for m, c in f:
            factor, reduced = rule(i, m)
            if factor:
                terms.append((reduced, factor * c))
        return Element.accumulate(terms)

    def monomials(self, bounds: Dict[Tuple[int, ...], int]) -> List[Monomial]:
        """
        Every valid monomial whose exponent sum over each index group stays
        within its bound.
        :param bounds: {tuple of variable indices: maximum total exponent}
        :return: monomials sorted by degree, then by written form
        """
        ranges = []
        for i, v in enumerate(self.variables):
            cap = min((bound for group, bound in bounds.items() if i in group), default=0)
            ranges.append(range(0, min(cap, 1) + 1) if v.odd else range(0, cap + 1))
        found = []
        for m in product(*ranges):
            if all(sum(m[i] for i in group) <= bound for group, bound in bounds.items()):
                found.append(tuple(m))
        return sorted(found, key=lambda m: (self.degree(m), self.name(m)))

    def polynomial(self, terms: Iterable[Tuple[str, object]]) -> Element:
        """Polynomial from (monomial name, coefficient) pairs."""
        return Element.accumulate((self.parse(name), c) for name, c in terms)

    def format(self, f: Element) -> str:
        if not f:
            return '0'
        parts = []
        for m, c in f:
            coefficient = '' if c == 1 else '-' if c == -1 else f'{c}*'
            parts.append(f'{coefficient}{self.name(m)}')
        return ' + '.join(parts).replace('+ -', '- ')


__all__ = ['Variable', 'SuperRing', 'Monomial']
