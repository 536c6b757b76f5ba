#!/usr/bin/env python
# -*- coding: utf-8 -*-


class Status:
    PASS = 'pass'
    FAIL = 'fail'
    SKIPPED = 'skipped-truncation'


class ExitCode:
    OK = 0
    FAILURE = 1
    CONFIG_ERROR = 2
    ALL_SKIPPED = 3


class OutputFormat:
    JSON = 'json'
    TEXT = 'text'


class Suite:
    SHUFFLE = 'shuffle'
    COBRACKET = 'cobracket'
    CODIFFERENTIAL = 'codifferential'
    BRACKET = 'bracket'
    DGLA = 'dgla'
    SYMMETRIC = 'symmetric'
    ENVELOPE = 'envelope'
    COBRACKET_DOUBLEPRIME = 'cobracket-doubleprime'
    SPECIALIZATION = 'specialization'

    # check-algebra
    AXIOMS = 'axioms'
    SHIFTED_LAWS = 'shifted-laws'
    HOMOGENEITY = 'homogeneity'
    INVARIANTS = 'invariants'

    ALL = (SHUFFLE, COBRACKET, CODIFFERENTIAL, BRACKET, DGLA, SYMMETRIC, ENVELOPE, COBRACKET_DOUBLEPRIME,
           SPECIALIZATION)
    # suites whose failures count as a detected mutation
    MUTATION_DETECTORS = (CODIFFERENTIAL, BRACKET, DGLA, SYMMETRIC, ENVELOPE, COBRACKET_DOUBLEPRIME)


class Command:
    CHECK_ALGEBRA = 'check-algebra'
    VERIFY_ENVELOPE = 'verify-envelope'
    MUTATION = 'mutation'
