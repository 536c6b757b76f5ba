#!/usr/bin/env python
# -*- coding: utf-8 -*-

import random
from itertools import product

import pytest

from abhomotopy.ab_core import check_ab_axioms
from abhomotopy.exceptions import ConfigError, ContractViolation
from abhomotopy.freemodule import Element
from abhomotopy.instances import PoissonRing, PolyvectorRing, SuperRing, Variable, build_builtin, build_example1, \
    build_example2, build_example3, build_example4, build_gerstenhaber, build_tensor, check_poisson_tensor, \
    derivation_defect, poisson_bracket, schouten, vector_field_commutator
from abhomotopy.models import Status


@pytest.fixture
def ring():
    return SuperRing([Variable('x', 2), Variable('xi', 1), Variable('eta', 1)])


def test_parse_and_name(ring):
    assert ring.parse('x^2*xi') == (2, 1, 0)
    assert ring.parse('1') == ring.one
    assert ring.name((2, 1, 0)) == 'x^2*xi'
    assert ring.degree((2, 1, 1)) == 6
    with pytest.raises(ContractViolation):
        ring.parse('xi^2')
    with pytest.raises(ContractViolation):
        ring.parse('y')


def test_odd_variables_anticommute(ring):
    xi, eta = Element.basis(ring.variable('xi')), Element.basis(ring.variable('eta'))
    assert ring.multiply(xi, eta) == Element.basis((0, 1, 1))
    assert ring.multiply(eta, xi) == -Element.basis((0, 1, 1))
    assert ring.multiply(xi, xi) == 0
    x = Element.basis(ring.variable('x'))
    assert ring.multiply(x, xi) == ring.multiply(xi, x)


def test_left_and_right_derivatives(ring):
    xi_eta = ring.polynomial([('xi*eta', 1)])
    assert ring.left_derivative(2, xi_eta) == -Element.basis(ring.variable('xi'))
    assert ring.right_derivative(2, xi_eta) == Element.basis(ring.variable('xi'))
    assert ring.left_derivative(0, ring.polynomial([('x^2*xi', 1)])) == ring.polynomial([('x*xi', 2)])
    assert ring.left_derivative(0, xi_eta) == 0


def test_derivatives_satisfy_the_graded_leibniz_rule():
    ring = PoissonRing(1, 2)
    basis = ring.basis(2)
    for i in range(len(ring.variables)):
        for m1, m2 in product(basis, repeat=2):
            assert derivation_defect(ring, i, Element.basis(m1), Element.basis(m2)) == 0


def test_polyvector_degrees():
    ring = PolyvectorRing(1, 1, x_degree=2, xi_degree=1, b=1)
    assert [v.degree for v in ring.variables] == [2, 1, -3, -2]
    assert ring.rank(ring.parse('x1*dx1*dxi1')) == 2
    with pytest.raises(ContractViolation):
        PolyvectorRing(0, 0)
    with pytest.raises(ContractViolation):
        ring.basis(0, 1)


def test_schouten_examples():
    ring = PolyvectorRing(2, 0, x_degree=0, b=-1)
    f = ring.polynomial
    assert schouten(ring, f([('dx1', 1)]), f([('x1^2*dx2', 1)])) == f([('x1*dx2', 2)])
    assert schouten(ring, f([('x2*dx1', 1)]), f([('x1*dx2', 1)])) == f([('x2*dx2', 1), ('x1*dx1', -1)])
    assert schouten(ring, f([('x1', 1)]), f([('x2', 1)])) == 0


def test_schouten_matches_the_commutator_of_vector_fields():
    ring = PolyvectorRing(2, 0, x_degree=0, b=-1)
    fields = [m for m in ring.basis(2, 1) if ring.rank(m) == 1]
    for m1, m2 in product(fields, repeat=2):
        x, y = Element.basis(m1), Element.basis(m2)
        assert schouten(ring, x, y) == vector_field_commutator(ring, x, y)


def test_poisson_bracket_values():
    ring = PoissonRing(2, 1)
    tensor = build_tensor(ring, 'symplectic')
    f = ring.polynomial
    assert poisson_bracket(tensor, f([('x1', 1)]), f([('x2', 1)])) == f([('1', 1)])
    assert poisson_bracket(tensor, f([('x1', 1)]), f([('x2^2', 1)])) == f([('x2', 2)])
    assert poisson_bracket(tensor, f([('xi1', 1)]), f([('x1', 1)])) == 0


@pytest.mark.parametrize('p, q, preset', [(2, 1, 'symplectic'), (3, 0, 'lie_poisson'), (2, 0, 'quadratic'),
                                          (1, 2, 'odd'), (2, 0, 'zero')])
def test_valid_presets(p, q, preset):
    report = check_poisson_tensor(build_tensor(PoissonRing(p, q), preset))
    assert report.valid, [str(r) for r in report.failures()]


def test_symmetric_preset_fails_graded_symmetry():
    report = check_poisson_tensor(build_tensor(PoissonRing(2, 0), 'symmetric'))
    assert {r.identity for r in report.failures()} == {'omega graded symmetry'}


def test_broken_jacobi_preset_fails_only_jacobi():
    report = check_poisson_tensor(build_tensor(PoissonRing(3, 0), 'broken_jacobi'))
    failures = report.failures()
    assert {r.identity for r in failures} == {'omega jacobi'}
    assert '(1, 2, 3)' in {r.instance for r in failures}
    assert all(r.status == Status.FAIL and r.rhs == '0' for r in failures)


def test_unknown_preset():
    with pytest.raises(ConfigError):
        build_tensor(PoissonRing(2, 0), 'nope')
    with pytest.raises(ConfigError):
        build_tensor(PoissonRing(2, 0), 'lie_poisson')


def test_builtin_degrees():
    example1 = build_example1()
    assert (example1.a, example1.b) == (0, -3)
    assert example1.generators['x1'] == 2
    assert example1.generators['dx1'] == 1
    example3 = build_example3()
    assert (example3.a, example3.b) == (0, 1)
    assert [example3.generators[n] for n in ('x1', 'xi1', 'dx1', 'dxi1')] == [2, 1, -3, -2]
    gerstenhaber = build_gerstenhaber()
    assert (gerstenhaber.generators['x1'], gerstenhaber.generators['dx1']) == (0, 1)


def test_example2_bracket_degree():
    algebra = build_example2(d=3, m=1)
    assert (algebra.a, algebra.b) == (0, -2)
    assert algebra.params['omega'] == 'lie_poisson'
    with pytest.raises(ConfigError):
        build_example2(m=3)


def test_example4_bracket_on_letters():
    algebra = build_example4()
    assert algebra.b == -4
    assert algebra.bracket(algebra.letter('x1'), algebra.letter('x2')) == Element.basis(algebra.letter('1'))


def test_builtin_invariants_pass():
    algebra = build_gerstenhaber()
    records = algebra.invariants()
    assert records
    assert all(r.status == Status.PASS for r in records)


def test_build_builtin_rejects_bad_input():
    with pytest.raises(ConfigError):
        build_builtin('nope')
    with pytest.raises(ConfigError):
        build_builtin('de_rham', {'bogus': 1})
    assert build_builtin('de_rham', {'max_poly_degree': 2}).params == {'max_poly_degree': 2}


def test_schouten_axioms_on_a_superspace():
    algebra = build_example3(p=2, q=1, max_poly_degree=2, max_rank=2)
    letters = algebra.letters()
    rng = random.Random('schouten')
    samples = [tuple(rng.choice(letters) for _ in range(3)) for _ in range(200)]
    report = check_ab_axioms(algebra, samples)
    assert report.valid, [r.to_dict() for r in report.failures()]
    assert any(r.status == Status.PASS for r in report.records)
