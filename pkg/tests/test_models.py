#!/usr/bin/env python
# -*- coding: utf-8 -*-

import pytest

from abhomotopy.exceptions import ConfigError
from abhomotopy.models import AxiomReport, ExitCode, IdentityRecord, Report, Status, Suite, SuiteConfig


def record(status, suite=Suite.SHUFFLE, **kwargs):
    return IdentityRecord(identity='shuffle commutativity', instance='(a, b)', status=status, suite=suite, **kwargs)


def test_witnesses_only_on_failure():
    passed = record(Status.PASS, lhs='a', rhs='a').to_dict()
    assert 'lhs' not in passed and 'rhs' not in passed
    failed = record(Status.FAIL, lhs='a', rhs='-a').to_dict()
    assert (failed['lhs'], failed['rhs']) == ('a', '-a')
    skipped = record(Status.SKIPPED, note='x^4 outside the basis').to_dict()
    assert skipped['note'] == 'x^4 outside the basis'
    assert 'wall_time_ms' not in skipped


def test_record_from_dict():
    r = IdentityRecord.from_dict(record(Status.FAIL, lhs='a', rhs='0', wall_time_ms=3).to_dict())
    assert r.failed
    assert r.wall_time_ms == 3
    assert r.suite == Suite.SHUFFLE


@pytest.mark.parametrize('statuses, code', [
    ([Status.PASS, Status.SKIPPED], ExitCode.OK),
    ([Status.PASS, Status.FAIL], ExitCode.FAILURE),
    ([Status.SKIPPED, Status.FAIL], ExitCode.FAILURE),
    ([Status.SKIPPED, Status.SKIPPED], ExitCode.ALL_SKIPPED),
    ([], ExitCode.OK),
])
def test_report_exit_codes(statuses, code):
    assert Report(records=[record(s) for s in statuses]).exit_code() == code


def test_report_groups_by_suite():
    report = Report(command='verify-envelope',
                    records=[record(Status.PASS), record(Status.FAIL, suite=Suite.DGLA, lhs='x', rhs='0')])
    data = report.to_dict()
    assert data['status'] == Status.FAIL
    assert data['summary'] == {Status.PASS: 1, Status.FAIL: 1, Status.SKIPPED: 0}
    assert list(data['suites']) == [Suite.SHUFFLE, Suite.DGLA]
    assert data['suites'][Suite.DGLA]['status'] == Status.FAIL
    assert 'extra' not in data
    assert Report.from_dict(data).status == Status.FAIL


def test_axiom_report():
    report = AxiomReport(algebra='toy', records=[record(Status.PASS), record(Status.FAIL)])
    assert not report.valid
    assert len(report.failures()) == 1
    assert report.to_dict()['summary'][Status.FAIL] == 1


def test_suite_config_defaults_and_merge():
    config = SuiteConfig.from_dict({'algebra': 'de_rham', 'seed': 7})
    assert (config.max_word_len, config.max_sym_factors, config.max_sym_letters) == (4, 4, 4)
    assert config.suites == list(Suite.ALL)
    merged = config.merged(seed=None, samples=2)
    assert (merged.seed, merged.samples, merged.algebra) == (7, 2, 'de_rham')
    assert config.samples == 8
    assert list(merged.report_dict())[:2] == ['algebra', 'params']


@pytest.mark.parametrize('values', [
    {'max_word_len': 0},
    {'jobs': 'many'},
    {'seed': 1.5},
    {'suites': ['shuffle', 'nope']},
    {'format': 'xml'},
    {'colour': 'blue'},
])
def test_suite_config_rejects_bad_values(values):
    with pytest.raises(ConfigError):
        SuiteConfig.from_dict(values)
