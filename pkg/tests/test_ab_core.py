#!/usr/bin/env python
# -*- coding: utf-8 -*-

from itertools import product

import pytest

from abhomotopy.ab_core import AbAlgebra, StructureTable, D, D_squared, check_ab_axioms, check_shifted_laws, \
    codifferential, coderivation_law_sides, compatibility_sides, ell, ell2, ell2_doubleprime, ell2_prime, \
    ell2_well_defined, homogeneity_errors, mu
from abhomotopy.exceptions import ContractViolation, TruncationOverflow
from abhomotopy.freemodule import Element
from abhomotopy.instances import build_de_rham, build_gerstenhaber
from abhomotopy.models import Status
from abhomotopy.tensor_coalgebra import TensorWord, is_zero_in_H, shuffle


@pytest.fixture(scope='module')
def de_rham():
    return build_de_rham()


@pytest.fixture(scope='module')
def gerstenhaber():
    return build_gerstenhaber()


def bracket_toy():
    """(0,-1) with five letters of dg 0 and [q, r] = s, [p, r] = t."""
    generators = {name: 1 for name in 'pqrst'}
    return AbAlgebra(0, -1, generators, bracket=StructureTable({('q', 'r'): {'s': 1}, ('p', 'r'): {'t': 1}}),
                     name='toy')


def test_letters_carry_the_shifted_degree(de_rham):
    assert de_rham.letter('x').degree == -1
    assert de_rham.letter('dx').degree == 0
    assert de_rham.degree(de_rham.letter('x*dx')) == 1
    assert de_rham.ell_degree == 1
    with pytest.raises(ContractViolation):
        de_rham.letter('y')


def test_structure_constants(de_rham):
    x, dx = de_rham.letter('x'), de_rham.letter('dx')
    assert de_rham.differential(x) == Element.basis(dx)
    assert de_rham.product(x, dx) == Element.basis(de_rham.letter('x*dx'))
    assert de_rham.bracket(x, dx) == 0
    # mu carries (-1)^{dg x}
    assert mu(de_rham, x, dx) == -Element.basis(de_rham.letter('x*dx'))
    assert ell(de_rham, x, dx) == 0


def test_truncation_overflow(de_rham):
    with pytest.raises(TruncationOverflow) as e:
        de_rham.product(de_rham.letter('x^3'), de_rham.letter('x'))
    assert e.value.basis == 'x^4'


def test_max_degree_truncates():
    algebra = AbAlgebra(0, 0, {'e': 0, 'f': 1}, product=StructureTable({('e', 'f'): {'f': 1}}), max_degree=0)
    with pytest.raises(TruncationOverflow):
        algebra.product(algebra.letter('e'), algebra.letter('f'))


def test_homogeneity_errors():
    algebra = AbAlgebra(0, -1, {'e': 0, 'f': 1}, bracket=StructureTable({('e', 'e'): {'f': 1}}))
    assert homogeneity_errors(algebra) == ['bracket(e,e) -> f: degree 1 != -1']
    assert homogeneity_errors(bracket_toy()) == []


def test_axioms_hold_on_builtins(de_rham, gerstenhaber):
    for algebra in (de_rham, gerstenhaber):
        letters = algebra.letters()[:4]
        samples = list(product(letters, repeat=3))
        report = check_ab_axioms(algebra, samples)
        assert report.valid, report.failures()
        assert check_shifted_laws(algebra, samples).valid


def test_axioms_skip_on_truncation(de_rham):
    x3, x = de_rham.letter('x^3'), de_rham.letter('x')
    report = check_ab_axioms(de_rham, [(x3, x, x)])
    statuses = {r.identity: r.status for r in report.records}
    assert statuses['associativity'] == Status.SKIPPED
    assert statuses['graded antisymmetry'] == Status.PASS


def test_perturbed_product_breaks_commutativity(de_rham):
    mutated = de_rham.perturbed('product', 'x', 'dx', 'x*dx')
    x, dx = mutated.letter('x'), mutated.letter('dx')
    assert mutated.product(x, dx) == 2 * Element.basis(mutated.letter('x*dx'))
    assert de_rham.product(x, dx) == Element.basis(de_rham.letter('x*dx'))
    report = check_ab_axioms(mutated, [(x, dx, x)])
    assert 'graded commutativity' in {r.identity for r in report.failures()}
    assert mutated.params['mutation'] == 'product(x,dx)[x*dx]+=1'


def test_codifferential_on_letters_and_pairs(de_rham):
    x, dx, xdx = de_rham.letter('x'), de_rham.letter('dx'), de_rham.letter('x*dx')
    assert D(de_rham, TensorWord([x])) == Element.basis(TensorWord([dx]))
    # D(x|x) = dx|x + (-1)^{dg x} x|dx + mu(x, x)
    expected = Element({TensorWord([dx, x]): 1, TensorWord([x, dx]): -1, TensorWord([de_rham.letter('x^2')]): -1})
    assert D(de_rham, TensorWord([x, x])) == expected
    assert D(de_rham, TensorWord([dx, xdx])) == 0


def test_d_squared_and_coderivation(de_rham):
    letters = [de_rham.letter(n) for n in ('x', 'dx', 'x*dx')]
    for length in (1, 2, 3):
        for w in product(letters, repeat=length):
            w = TensorWord(w)
            value, _ = D_squared(de_rham, Element.basis(w))
            assert value == 0
            lhs, rhs = coderivation_law_sides(de_rham, w)
            assert lhs == rhs


def test_d_preserves_shuffles(de_rham):
    x, dx = TensorWord([de_rham.letter('x')]), TensorWord([de_rham.letter('dx')])
    for left, right in product([x, dx], repeat=2):
        assert is_zero_in_H(codifferential(de_rham, shuffle(left, right)))


def test_ell2_on_a_two_letter_word():
    algebra = bracket_toy()
    p, q, r, s, t = (TensorWord([algebra.letter(n)]) for n in 'pqrst')
    pq = TensorWord(tuple(p) + tuple(q))
    # ell2(p|q, r) = p|[q,r] + [p,r]|q
    expected = Element.basis(TensorWord(tuple(p) + tuple(s))) + Element.basis(TensorWord(tuple(t) + tuple(q)))
    assert ell2(algebra, pq, r) == expected
    assert ell2(algebra, r, pq) == 0


def test_ell2_shifted_variants(gerstenhaber):
    letters = gerstenhaber.letters()
    x, y = TensorWord(letters[1:3]), TensorWord(letters[3:4])
    base = ell2(gerstenhaber, x, y)
    # a - b - 1 = 0: ell'_2 = ell_2; ell''_2 = (-1)^{x''} ell_2
    assert ell2_prime(gerstenhaber, x, y) == base
    sign = -1 if (x.degree - 1) & 1 else 1
    assert ell2_doubleprime(gerstenhaber, x, y) == sign * base


def test_ell2_compatibility_and_well_definedness(gerstenhaber):
    letters = gerstenhaber.letters()[:4]
    for x, y in product([TensorWord([g]) for g in letters] + [TensorWord(letters[1:3])], repeat=2):
        lhs, rhs = compatibility_sides(gerstenhaber, x, y)
        assert lhs == rhs
    assert ell2_well_defined(gerstenhaber, TensorWord(letters[1:3]), TensorWord(letters[3:4]), 1)
