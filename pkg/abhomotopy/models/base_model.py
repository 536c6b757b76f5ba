#!/usr/bin/env python
# -*- coding: utf-8 -*-

from collections import Counter, OrderedDict

from ..exceptions import ConfigError
from .config import ExitCode, OutputFormat, Status, Suite

__all__ = ['IdentityRecord', 'AxiomReport', 'Report', 'SuiteConfig']


class IdentityRecord:
    def __init__(self, identity, instance, status, suite=None, statement=None, lhs=None, rhs=None, note=None,
                 wall_time_ms=None):
        self.identity = identity
        self.instance = instance
        self.status = status
        self.suite = suite
        self.statement = statement
        self.lhs = lhs
        self.rhs = rhs
        self.note = note
        self.wall_time_ms = wall_time_ms

    def __repr__(self):
        return "<{klass} @{id:x} {attrs}>".format(
            klass=self.__class__.__name__,
            id=id(self) & 0xFFFFFF,
            attrs=" ".join("{}={!r}".format(k, v) for k, v in self.__dict__.items()),
        )

    @property
    def failed(self) -> bool:
        return self.status == Status.FAIL

    @staticmethod
    def from_dict(obj):
        return IdentityRecord(
            identity=obj.get('identity'),
            instance=obj.get('instance'),
            status=obj.get('status'),
            suite=obj.get('suite'),
            statement=obj.get('statement'),
            lhs=obj.get('lhs'),
            rhs=obj.get('rhs'),
            note=obj.get('note'),
            wall_time_ms=obj.get('wall_time_ms'),
        )

    def to_dict(self):
        result = OrderedDict([('suite', self.suite),
                              ('identity', self.identity),
                              ('statement', self.statement),
                              ('instance', self.instance),
                              ('status', self.status)])
        # witnesses only on failure, notes only on skips
        if self.status == Status.FAIL:
            result['lhs'] = self.lhs
            result['rhs'] = self.rhs
        if self.note:
            result['note'] = self.note
        if self.wall_time_ms is not None:
            result['wall_time_ms'] = self.wall_time_ms
        return result


def _count(records):
    counter = Counter(r.status for r in records)
    return {status: counter.get(status, 0) for status in (Status.PASS, Status.FAIL, Status.SKIPPED)}


def _overall(records) -> str:
    counts = _count(records)
    if counts[Status.FAIL]:
        return Status.FAIL
    if records and not counts[Status.PASS]:
        return Status.SKIPPED
    return Status.PASS


class AxiomReport:
    """Per-axiom records of one algebra."""

    def __init__(self, algebra=None, records=None):
        self.algebra = algebra
        self.records = list(records or [])

    def __repr__(self):
        return "<{klass} @{id:x} {attrs}>".format(
            klass=self.__class__.__name__,
            id=id(self) & 0xFFFFFF,
            attrs=f'algebra={self.algebra!r} {self.summary()}',
        )

    @property
    def valid(self) -> bool:
        return not any(r.failed for r in self.records)

    def failures(self):
        return [r for r in self.records if r.failed]

    def summary(self) -> dict:
        return _count(self.records)

    def to_dict(self):
        return {'algebra': self.algebra,
                'valid': self.valid,
                'summary': self.summary(),
                'records': [r.to_dict() for r in self.records]}


class Report:
    def __init__(self, command=None, algebra=None, config=None, records=None, extra=None):
        self.command = command
        self.algebra = algebra or {}
        self.config = config or {}
        self.records = list(records or [])
        self.extra = dict(extra or {})

    def __repr__(self):
        return "<{klass} @{id:x} {attrs}>".format(
            klass=self.__class__.__name__,
            id=id(self) & 0xFFFFFF,
            attrs=f'command={self.command!r} status={self.status!r} {self.summary()}',
        )

    def summary(self) -> dict:
        return _count(self.records)

    @property
    def status(self) -> str:
        return _overall(self.records)

    def suites(self) -> dict:
        grouped = OrderedDict()
        for r in self.records:
            grouped.setdefault(r.suite, []).append(r)
        return OrderedDict((suite, dict(_count(rs), status=_overall(rs))) for suite, rs in grouped.items())

    def exit_code(self) -> int:
        status = self.status
        if status == Status.FAIL:
            return ExitCode.FAILURE
        if status == Status.SKIPPED:
            return ExitCode.ALL_SKIPPED
        return ExitCode.OK

    @staticmethod
    def from_dict(obj):
        return Report(
            command=obj.get('command'),
            algebra=obj.get('algebra'),
            config=obj.get('config'),
            records=[IdentityRecord.from_dict(r) for r in obj.get('records', [])],
            extra=obj.get('extra'),
        )

    def to_dict(self):
        result = OrderedDict([('command', self.command),
                              ('algebra', self.algebra),
                              ('config', self.config),
                              ('status', self.status),
                              ('summary', self.summary()),
                              ('suites', self.suites())])
        if self.extra:
            result['extra'] = self.extra
        result['records'] = [r.to_dict() for r in self.records]
        return result


class SuiteConfig:
    """
    Merged configuration of one verifier run: the YAML `abhomotopy` section
    overridden by command-line flags.
    """

    defaults = {
        'algebra': 'example4',
        'params': {},
        'max_word_len': 4,
        'max_sym_factors': 4,
        'max_sym_letters': 4,
        'max_degree': None,
        'seed': 0,
        'suites': list(Suite.ALL),
        'jobs': 1,
        'samples': 8,
        'pool_size': 3,
        'with_timings': False,
        'format': OutputFormat.JSON,
        'report': None,
        'debug': False,
    }

    def __init__(self, **kwargs):
        unknown = set(kwargs) - set(self.defaults)
        if unknown:
            raise ConfigError(f'unknown configuration keys: {", ".join(sorted(unknown))}')
        for key, default in self.defaults.items():
            value = kwargs.get(key)
            setattr(self, key, default if value is None else value)
        self.params = dict(self.params)
        self.suites = list(self.suites)
        self.validate()

    def __repr__(self):
        return "<{klass} @{id:x} {attrs}>".format(
            klass=self.__class__.__name__,
            id=id(self) & 0xFFFFFF,
            attrs=" ".join("{}={!r}".format(k, v) for k, v in self.__dict__.items()),
        )

    def validate(self):
        for key in ('max_word_len', 'max_sym_factors', 'max_sym_letters', 'jobs', 'samples', 'pool_size'):
            value = getattr(self, key)
            if not isinstance(value, int) or value < 1:
                raise ConfigError(f'{key} must be an integer >= 1, got {value!r}')
        if not isinstance(self.seed, int):
            raise ConfigError(f'seed must be an integer, got {self.seed!r}')
        if self.max_degree is not None and not isinstance(self.max_degree, int):
            raise ConfigError(f'max_degree must be an integer, got {self.max_degree!r}')
        unknown = [s for s in self.suites if s not in Suite.ALL]
        if unknown:
            raise ConfigError(f'unknown suites: {", ".join(unknown)}')
        if self.format not in (OutputFormat.JSON, OutputFormat.TEXT):
            raise ConfigError(f'unknown report format {self.format!r}')

    def merged(self, **overrides) -> 'SuiteConfig':
        values = self.to_dict()
        values.update({k: v for k, v in overrides.items() if v is not None})
        return SuiteConfig(**values)

    @staticmethod
    def from_dict(obj):
        return SuiteConfig(**(obj or {}))

    def to_dict(self):
        return OrderedDict((key, getattr(self, key)) for key in self.defaults)

    def report_dict(self):
        """The configuration fields that determine a run, as recorded in reports."""
        keep = ('algebra', 'params', 'max_word_len', 'max_sym_factors', 'max_sym_letters', 'max_degree', 'seed',
                'suites', 'samples', 'pool_size')
        return OrderedDict((key, getattr(self, key)) for key in keep)
