#!/usr/bin/env python
# -*- coding: utf-8 -*-

from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st
from sympy import Matrix

from abhomotopy.freemodule import EchelonBasis, Element, bilinear, format_scalar, row_reduce, to_scalar

BASIS = ('a', 'b', 'c', 'd')

elements = st.dictionaries(st.sampled_from(BASIS), st.integers(-5, 5), max_size=4).map(Element)
scalars = st.fractions(min_value=-4, max_value=4, max_denominator=5)


def test_to_scalar_and_format():
    assert to_scalar('3/4') == Fraction(3, 4)
    assert to_scalar(' -2 ') == -2
    assert to_scalar(Fraction(1, 3)) == Fraction(1, 3)
    assert format_scalar(Fraction(-1, 2)) == '-1/2'
    assert format_scalar(Fraction(4)) == '4'


def test_zero_coefficients_are_dropped():
    assert Element({'a': 0}) == Element()
    assert Element({'a': 0}) == 0
    assert not Element.accumulate([('a', 1), ('a', -1)])
    assert Element.accumulate([('a', 1), ('b', 2), ('a', 2)]).coefficient('a') == 3
    assert Element.basis('b').support() == ['b']


def test_str_is_canonical():
    v = Element({'b': -1, 'a': 1, 'c': Fraction(1, 2)})
    assert str(v) == 'a - b + 1/2*c'
    assert str(Element()) == '0'
    assert v.leading() == ('a', 1)


@given(x=elements, y=elements, z=elements)
def test_module_laws(x, y, z):
    assert x + y == y + x
    assert (x + y) + z == x + (y + z)
    assert x - x == 0
    assert x + Element.zero() == x
    assert -(-x) == x


@given(x=elements, y=elements, c=scalars, d=scalars)
def test_scaling(x, y, c, d):
    assert c * (x + y) == c * x + c * y
    assert (c + d) * x == c * x + d * x
    assert 0 * x == 0
    assert hash(x + y) == hash(y + x)


@given(x=elements, y=elements, z=elements)
def test_bilinear_extension(x, y, z):
    def pair(u, v):
        return Element.basis(u + v)

    assert bilinear(pair, x + y, z) == bilinear(pair, x, z) + bilinear(pair, y, z)
    assert bilinear(pair, x, 2 * z) == 2 * bilinear(pair, x, z)


def test_map_is_linear():
    v = Element({'a': 2, 'b': -1})
    doubled = v.map(lambda k: Element({k: 1, k + k: 1}))
    assert doubled == Element({'a': 2, 'aa': 2, 'b': -1, 'bb': -1})


def test_row_reduce_finds_dependencies():
    a, b, c = (Element.basis(k) for k in 'abc')
    basis = row_reduce([a + b, b + c, a - c])
    assert basis.rank == 2
    assert basis.contains(a - c)
    assert not basis.contains(a)
    assert basis.reduce(a + b) == 0
    assert basis.reduce(a) != 0


def test_echelon_rows_are_reduced():
    a, b, c = (Element.basis(k) for k in 'abc')
    basis = EchelonBasis()
    assert basis.insert(2 * a + 4 * b)
    assert basis.insert(b + c)
    assert not basis.insert(a + b - c)
    for row in basis.rows():
        pivot, coefficient = row.leading()
        assert coefficient == 1
        others = [r for r in basis.rows() if r != row]
        assert all(other.coefficient(pivot) == 0 for other in others)


@given(rows=st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), min_size=1, max_size=6))
def test_rank_matches_dense_oracle(rows):
    vectors = [Element(zip(BASIS, row)) for row in rows]
    assert row_reduce(vectors).rank == Matrix(rows).rank()
