#!/usr/bin/env python
# -*- coding: utf-8 -*-

from itertools import product

import pytest

from abhomotopy.freemodule import Element
from abhomotopy.identities import LADDER, ladder
from abhomotopy.instances import build_de_rham, build_gerstenhaber
from abhomotopy.models import Suite
from abhomotopy.sym_coalgebra import SymWord
from abhomotopy.tensor_coalgebra import TensorWord, shuffle_elements
from abhomotopy.utils import all_words, small_symwords

BY_NAME = {identity.name: identity for identity in LADDER}


@pytest.fixture(scope='module')
def de_rham():
    return build_de_rham()


def test_ladder_is_well_formed():
    assert len(BY_NAME) == len(LADDER)
    assert {identity.suite for identity in LADDER} == set(Suite.ALL)
    assert all(identity.kind in ('word', 'sym') for identity in LADDER)
    assert all(identity.kind == 'word' or identity.arity == 1 for identity in LADDER)


def test_specializations_follow_the_degrees(de_rham):
    gerstenhaber = {identity.name for identity in ladder(Suite.ALL, build_gerstenhaber())}
    assert {'kappa', 'gerstenhaber bracket'} <= gerstenhaber
    assert not {'poisson delta', 'poisson bracket'} & gerstenhaber
    poisson = {identity.name for identity in ladder(Suite.ALL, de_rham)}
    assert {'poisson delta', 'poisson bracket'} <= poisson
    assert not {'kappa', 'gerstenhaber bracket'} & poisson


def test_ladder_keeps_the_selected_suites_in_order(de_rham):
    selected = ladder([Suite.SHUFFLE, Suite.COBRACKET], de_rham)
    assert [identity.name for identity in selected] == ['shuffle commutativity', 'shuffle associativity',
                                                        'delta coantisymmetry', 'delta cojacobi']


def test_evaluate_elements_is_multilinear(de_rham):
    commutativity = BY_NAME['shuffle commutativity']
    one, x, dx = (TensorWord([de_rham.letter(n)]) for n in ('1', 'x', 'dx'))
    left = Element.basis(one) + 2 * Element.basis(x)
    right = Element.basis(dx)
    lhs, rhs, note = commutativity.evaluate_elements(de_rham, left, right)
    assert lhs == shuffle_elements(left, right)
    assert lhs == rhs
    assert note is None


def test_every_identity_holds_on_a_closed_subalgebra(de_rham):
    # 1 and dx span a subalgebra closed under every operation, so nothing overflows
    pool = [de_rham.letter('1'), de_rham.letter('dx')]
    words = all_words(pool, 2)
    symwords = small_symwords(pool, 2, 0) + [SymWord((TensorWord(pool),))]
    for identity in ladder(Suite.ALL, de_rham):
        if identity.kind == 'word':
            arguments = product(words, repeat=identity.arity)
        else:
            arguments = ((w,) for w in symwords)
        for args in arguments:
            result = identity.evaluate(de_rham, *args)
            assert result[0] == result[1], (identity.name, args)
