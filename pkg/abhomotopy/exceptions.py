#!/usr/bin/env python
# -*- coding: utf-8 -*-


class AbHomotopyError(Exception):
    """Base class of every error raised by the package."""


class ContractViolation(AbHomotopyError, ValueError):
    """A precondition of an operation does not hold (length mismatch, empty word...)."""


class TruncationOverflow(AbHomotopyError, ArithmeticError):
    """
    An operation produced a basis object outside the truncated basis.
    :param operation: name of the structure map that overflowed
    :param basis: the offending basis object (its name)
    """

    def __init__(self, operation: str, basis):
        self.operation = operation
        self.basis = basis
        super().__init__(f'{operation} leaves the truncated basis: {basis}')


class SpecFormatError(AbHomotopyError):
    """Malformed algebra file. Carries the line number and the field name."""

    def __init__(self, message: str, line: int = None, field: str = None):
        self.line = line
        self.field = field
        location = []
        if line is not None:
            location.append(f'line {line}')
        if field:
            location.append(f'field {field!r}')
        if location:
            message = f'{message} ({", ".join(location)})'
        super().__init__(message)


class ConfigError(AbHomotopyError):
    """Invalid suite configuration or unknown builtin instance."""
