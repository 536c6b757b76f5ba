#!/usr/bin/env python
# -*- coding: utf-8 -*-

import json
import logging

import pytest

from abhomotopy.exceptions import ConfigError
from abhomotopy.models import Command, ExitCode, IdentityRecord, Report, Status, Suite, SuiteConfig
from abhomotopy.utils import all_words, small_symwords, word_tuples
from abhomotopy.verifier import EnvelopeVerifier


def small(**kwargs):
    values = dict(samples=1, max_word_len=2, pool_size=2, max_sym_letters=3)
    values.update(kwargs)
    return EnvelopeVerifier(SuiteConfig(**values))


@pytest.mark.parametrize('algebra, params', [
    ('de_rham', {}),
    ('gerstenhaber', {}),
    ('example1', {}),
    ('example2', {'m': 2}),
    ('example3', {'p': 1, 'q': 1}),
    ('example4', {'p': 2, 'q': 1}),
])
def test_verify_envelope_passes_on_builtins(algebra, params):
    verifier = small(algebra=algebra, params=params)
    report = verifier.run(Command.VERIFY_ENVELOPE)
    assert report.summary()[Status.FAIL] == 0, [r.to_dict() for r in report.records if r.failed]
    assert report.status == Status.PASS
    assert verifier.exit_code(report) == ExitCode.OK
    assert set(report.suites()) <= set(Suite.ALL)


def test_tasks_enumerate_every_argument_within_the_bounds():
    verifier = small(algebra='de_rham', pool_size=3, max_word_len=3, max_sym_letters=4)
    algebra = verifier.load_algebra()
    pool = verifier._pool(algebra)
    assert len(pool) == 3 and algebra.letter('1') not in pool
    assert len({g.degree & 1 for g in pool}) == 2

    tasks = verifier.tasks(algebra, Suite.ALL, pool)

    def instances(name):
        return {instance for identity, _, instance in tasks if identity.name == name}

    assert instances('delta cojacobi') >= {str(w) for w in all_words(pool, 3)}
    pairs = {', '.join(str(w) for w in pair) for pair in word_tuples(pool, 2, 2, 4)}
    assert len(pairs) == 12 * 12
    assert instances("ell2'' symmetry") >= pairs
    assert instances('Q squared') >= {str(w) for w in small_symwords(pool, 4, 0, 3, 4)}
    capped = instances("delta'' cojacobi")
    assert capped >= {str(w) for w in small_symwords(pool, 2, 0, 2, 4)}
    assert len(capped) <= len(small_symwords(pool, 2, 0, 2, 4)) + verifier.config.samples


def test_truncation_heavy_suites_are_logged(caplog):
    records = [IdentityRecord('ell2\'\' jacobi', str(i), Status.SKIPPED, suite=Suite.SYMMETRIC) for i in range(3)]
    records.append(IdentityRecord('ell2\'\' jacobi', '3', Status.PASS, suite=Suite.SYMMETRIC))
    records.append(IdentityRecord('D squared', '0', Status.PASS, suite=Suite.CODIFFERENTIAL))
    with caplog.at_level(logging.WARNING, logger='abhomotopy.verifier'):
        EnvelopeVerifier.log_records(records)
    warnings = [r.getMessage() for r in caplog.records if r.levelno == logging.WARNING]
    assert len(warnings) == 1
    assert warnings[0].startswith(f'{Suite.SYMMETRIC}: truncation skipped 3 records against 1 passes')


def test_selected_suites_only():
    report = small(algebra='de_rham', suites=[Suite.SHUFFLE]).run(Command.VERIFY_ENVELOPE)
    assert list(report.suites()) == [Suite.SHUFFLE]


def test_json_report_is_deterministic():
    first = small(algebra='de_rham', seed=5).run(Command.VERIFY_ENVELOPE)
    second = small(algebra='de_rham', seed=5, jobs=2).run(Command.VERIFY_ENVELOPE)
    rendered = EnvelopeVerifier.render_json(first)
    assert rendered == EnvelopeVerifier.render_json(second)
    assert rendered.endswith('\n')
    data = json.loads(rendered)
    assert data['command'] == Command.VERIFY_ENVELOPE
    assert data['config']['seed'] == 5
    assert all('wall_time_ms' not in r for r in data['records'])


def test_timings_are_opt_in():
    report = small(algebra='de_rham', suites=[Suite.SHUFFLE], with_timings=True).run(Command.VERIFY_ENVELOPE)
    assert all(r.wall_time_ms is not None for r in report.records)


@pytest.mark.parametrize('algebra', ['de_rham', 'example4'])
@pytest.mark.parametrize('seed', [0, 1, 2])
def test_mutation_is_detected(algebra, seed):
    verifier = small(algebra=algebra, seed=seed)
    report = verifier.run(Command.MUTATION)
    assert report.extra['detected'] is True
    assert report.extra['mutation'].startswith(('product(', 'bracket('))
    assert verifier.exit_code(report) == ExitCode.OK
    assert verifier.exit_code(Report(command=Command.MUTATION, extra={'detected': False})) == ExitCode.FAILURE


def test_check_algebra_on_a_poisson_instance():
    report = small(algebra='example4', pool_size=3).run(Command.CHECK_ALGEBRA)
    assert report.status == Status.PASS, [r.to_dict() for r in report.records if r.failed]
    suites = set(report.suites())
    assert {Suite.AXIOMS, Suite.SHIFTED_LAWS, Suite.HOMOGENEITY, Suite.INVARIANTS} <= suites
    assert report.algebra['b'] == -4


def test_check_algebra_reports_a_broken_tensor():
    verifier = small(algebra='example4', params={'p': 3, 'q': 0, 'omega': 'broken_jacobi', 'max_poly_degree': 1})
    report = verifier.run(Command.CHECK_ALGEBRA)
    assert verifier.exit_code(report) == ExitCode.FAILURE
    assert {r.identity for r in report.records if r.failed} >= {'omega jacobi'}


def test_algebra_from_a_spec_file(tmp_path):
    path = tmp_path / 'toy.json'
    path.write_text(json.dumps({
        'a': 0, 'b': -1,
        'generators': [{'id': 'p', 'degree': 1}, {'id': 'q', 'degree': 1}, {'id': 's', 'degree': 1}],
        'bracket': [['p', 'q', [['s', 1]]], ['q', 'p', [['s', -1]]]],
    }), encoding='utf-8')
    verifier = small(algebra=str(path), suites=[Suite.BRACKET])
    report = verifier.run(Command.VERIFY_ENVELOPE)
    assert report.algebra['name'] == 'toy'
    assert report.status == Status.PASS


def test_missing_spec_file():
    with pytest.raises(ConfigError):
        small(algebra='missing.json').run(Command.CHECK_ALGEBRA)


def test_export_writes_the_rendered_report(tmp_path):
    verifier = small(algebra='de_rham', suites=[Suite.SHUFFLE], format='text')
    report = verifier.run(Command.VERIFY_ENVELOPE)
    target = tmp_path / 'out' / 'report.txt'
    verifier.export(report, str(target))
    text = target.read_text(encoding='utf-8')
    assert text.startswith('command: verify-envelope')
    assert 'status: pass' in text
