#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Exact free module over Q.

An Element is a finite formal combination of basis objects with Fraction
coefficients. Basis objects must be hashable and mutually comparable: the
natural (tuple) order of the basis objects is the canonical term order.
"""

import logging
from fractions import Fraction
from typing import Callable, Dict, Hashable, Iterable, List, Tuple

logger = logging.getLogger(__name__)

Scalar = Fraction


def to_scalar(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        return Fraction(value.strip())
    return Fraction(value)


def format_scalar(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f'{value.numerator}/{value.denominator}'


class Element:
    """
    Immutable finite linear combination. Zero coefficients are never stored,
    so equality of Elements is equality of their term maps.
    """

    __slots__ = ('_terms', '_hash')

    def __init__(self, terms=None):
        clean = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for basis, coefficient in items:
                coefficient = to_scalar(coefficient)
                if coefficient:
                    clean[basis] = clean.get(basis, 0) + coefficient
                    if not clean[basis]:
                        del clean[basis]
        self._terms = clean
        self._hash = None

    @classmethod
    def basis(cls, basis, coefficient=1) -> 'Element':
        return cls({basis: coefficient})

    @classmethod
    def zero(cls) -> 'Element':
        return cls()

    @classmethod
    def accumulate(cls, terms: Iterable[Tuple[Hashable, Fraction]]) -> 'Element':
        """Sum (basis, coefficient) pairs, repeated basis objects allowed."""
        acc = {}
        for basis, coefficient in terms:
            if coefficient:
                acc[basis] = acc.get(basis, 0) + coefficient
        element = cls.__new__(cls)
        element._terms = {k: to_scalar(v) for k, v in acc.items() if v}
        element._hash = None
        return element

    @classmethod
    def sum(cls, elements: Iterable['Element']) -> 'Element':
        return cls.accumulate(term for element in elements for term in element._terms.items())

    def items(self) -> List[Tuple[Hashable, Fraction]]:
        """Terms in canonical order."""
        return sorted(self._terms.items(), key=lambda kv: kv[0])

    def support(self) -> List[Hashable]:
        return sorted(self._terms)

    def coefficient(self, basis) -> Fraction:
        return self._terms.get(basis, Fraction(0))

    def leading(self) -> Tuple[Hashable, Fraction]:
        basis = min(self._terms)
        return basis, self._terms[basis]

    def map(self, f: Callable[[Hashable], 'Element']) -> 'Element':
        """Linear extension of f defined on basis objects."""
        return Element.accumulate((b, c * d) for basis, c in self._terms.items() for b, d in f(basis)._terms.items())

    def __iter__(self):
        return iter(self.items())

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __contains__(self, basis):
        return basis in self._terms

    def __add__(self, other: 'Element') -> 'Element':
        return add(self, other)

    def __sub__(self, other: 'Element') -> 'Element':
        return add(self, scale(-1, other))

    def __neg__(self) -> 'Element':
        return scale(-1, self)

    def __mul__(self, c) -> 'Element':
        return scale(c, self)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, Element):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __str__(self):
        if not self._terms:
            return '0'
        parts = []
        for basis, coefficient in self.items():
            if coefficient == 1:
                parts.append(f'{basis}')
            elif coefficient == -1:
                parts.append(f'-{basis}')
            else:
                parts.append(f'{format_scalar(coefficient)}*{basis}')
        return ' + '.join(parts).replace('+ -', '- ')

    def __repr__(self):
        return f'<Element {self}>'


def add(x: Element, y: Element) -> Element:
    return Element.accumulate(list(x._terms.items()) + list(y._terms.items()))


def scale(c, x: Element) -> Element:
    c = to_scalar(c)
    if not c:
        return Element()
    return Element.accumulate((basis, c * coefficient) for basis, coefficient in x._terms.items())


def bilinear(f: Callable[[Hashable, Hashable], Element], x: Element, y: Element) -> Element:
    """Bilinear extension of f defined on pairs of basis objects."""
    return Element.accumulate(
        (b, cx * cy * d)
        for bx, cx in x._terms.items()
        for by, cy in y._terms.items()
        for b, d in f(bx, by)._terms.items()
    )


class EchelonBasis:
    """
    Fully reduced echelon basis of a span. Each row is keyed by its pivot,
    the smallest basis object of the row, with pivot coefficient 1; no row
    has a nonzero coordinate at another row's pivot.
    """

    def __init__(self):
        self._rows: Dict[Hashable, Dict[Hashable, Fraction]] = {}

    @property
    def rank(self) -> int:
        return len(self._rows)

    def __len__(self):
        return len(self._rows)

    def rows(self) -> List[Element]:
        return [Element(self._rows[pivot]) for pivot in sorted(self._rows)]

    def _reduce(self, terms: Dict[Hashable, Fraction]) -> Dict[Hashable, Fraction]:
        remainder = dict(terms)
        for key in [k for k in terms if k in self._rows]:
            c = remainder.get(key)
            if not c:
                continue
            for basis, value in self._rows[key].items():
                updated = remainder.get(basis, 0) - c * value
                if updated:
                    remainder[basis] = updated
                else:
                    remainder.pop(basis, None)
        return remainder

    def reduce(self, v: Element) -> Element:
        """Remainder of v after elimination; zero iff v lies in the span."""
        return Element(self._reduce(v._terms))

    def contains(self, v: Element) -> bool:
        return not self._reduce(v._terms)

    def insert(self, v: Element) -> bool:
        remainder = self._reduce(v._terms)
        if not remainder:
            return False
        pivot = min(remainder)
        inverse = 1 / remainder[pivot]
        row = {basis: value * inverse for basis, value in remainder.items()}
        for other in self._rows.values():
            c = other.get(pivot)
            if c:
                for basis, value in row.items():
                    updated = other.get(basis, 0) - c * value
                    if updated:
                        other[basis] = updated
                    else:
                        other.pop(basis, None)
        self._rows[pivot] = row
        return True


def row_reduce(vectors: Iterable[Element]) -> EchelonBasis:
    """
    Reduced echelon basis of the span of vectors, deterministic given the
    basis order.
    """
    basis = EchelonBasis()
    for v in vectors:
        basis.insert(v)
    return basis
