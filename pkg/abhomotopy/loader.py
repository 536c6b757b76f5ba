#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Algebra spec files.

A spec file is a JSON document:

    {
      "name": "toy",
      "a": 0, "b": -1,
      "max_degree": 3,
      "generators": [{"id": "x", "degree": 0}, {"id": "y", "degree": 1}],
      "product": [["x", "y", [["y", "1"]]]],
      "bracket": [["y", "y", {"y": "-1/2"}]],
      "differential": [["x", [["y", "2"]]]]
    }

Coefficients are integers or "num/den" strings. Entries not listed are zero.
"""

import json
import logging
import os
from typing import Dict, Optional

from .ab_core import AbAlgebra, StructureTable, homogeneity_errors
from .exceptions import SpecFormatError
from .freemodule import to_scalar

logger = logging.getLogger(__name__)

REQUIRED = ('a', 'b', 'generators')


def _line_of(text: str, field: str) -> Optional[int]:
    """First line mentioning the field, for error locations."""
    needle = f'"{field}"'
    for number, line in enumerate(text.splitlines(), 1):
        if needle in line:
            return number
    return None


class _Reader:

    def __init__(self, text: str):
        self.text = text

    def fail(self, message: str, field: str, anchor: str = None):
        raise SpecFormatError(message, line=_line_of(self.text, anchor or field), field=field)

    def integer(self, obj: dict, field: str) -> int:
        value = obj.get(field)
        if not isinstance(value, int) or isinstance(value, bool):
            self.fail(f'expected an integer, got {value!r}', field)
        return value

    def generators(self, obj: dict) -> Dict[str, int]:
        raw = obj.get('generators')
        if not isinstance(raw, list) or not raw:
            self.fail('expected a nonempty list of generators', 'generators')
        generators = {}
        for entry in raw:
            if not isinstance(entry, dict) or not isinstance(entry.get('id'), str):
                self.fail(f'generator needs a string id: {entry!r}', 'generators')
            gid = entry['id']
            if gid in generators:
                self.fail(f'duplicate generator {gid!r}', 'generators', gid)
            degree = entry.get('degree')
            if not isinstance(degree, int) or isinstance(degree, bool):
                self.fail(f'generator {gid!r} needs an integer degree', 'generators', gid)
            generators[gid] = degree
        return generators

    def coefficients(self, raw, field: str, generators: Dict[str, int]) -> dict:
        if isinstance(raw, dict):
            pairs = list(raw.items())
        elif isinstance(raw, list) and all(isinstance(p, list) and len(p) == 2 for p in raw):
            pairs = [tuple(p) for p in raw]
        else:
            self.fail(f'expected [[target, coefficient], ...] or {{target: coefficient}}, got {raw!r}', field)
        result = {}
        for target, coefficient in pairs:
            if target not in generators:
                self.fail(f'unknown generator {target!r}', field)
            try:
                value = to_scalar(coefficient)
            except (ValueError, TypeError, ZeroDivisionError):
                self.fail(f'bad coefficient {coefficient!r}', field)
            result[target] = result.get(target, 0) + value
        return {k: v for k, v in result.items() if v}

    def table(self, obj: dict, field: str, arity: int, generators: Dict[str, int]) -> dict:
        raw = obj.get(field, [])
        if not isinstance(raw, list):
            self.fail('expected a list of entries', field)
        entries = {}
        for entry in raw:
            if not isinstance(entry, list) or len(entry) != arity + 1:
                self.fail(f'expected {arity} generator ids and a coefficient list, got {entry!r}', field)
            sources = entry[:arity]
            for source in sources:
                if source not in generators:
                    self.fail(f'unknown generator {source!r}', field)
            key = tuple(sources) if arity == 2 else sources[0]
            if key in entries:
                self.fail(f'duplicate entry for {key!r}', field)
            entries[key] = self.coefficients(entry[arity], field, generators)
        return entries


def parse_algebra(text: str, max_degree: Optional[int] = None, source: str = '<string>') -> AbAlgebra:
    """
    :param text: the JSON document
    :param max_degree: degree truncation; overrides the file's max_degree
    :param source: name used in log messages
    :return: AbAlgebra with explicit structure tables
    """
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise SpecFormatError(f'invalid JSON: {e.msg}', line=e.lineno) from None
    if not isinstance(obj, dict):
        raise SpecFormatError('expected a JSON object', line=1)
    reader = _Reader(text)
    for field in REQUIRED:
        if field not in obj:
            raise SpecFormatError('missing field', field=field)

    a, b = reader.integer(obj, 'a'), reader.integer(obj, 'b')
    generators = reader.generators(obj)
    if max_degree is None and obj.get('max_degree') is not None:
        max_degree = reader.integer(obj, 'max_degree')

    algebra = AbAlgebra(
        a, b, generators,
        product=StructureTable(reader.table(obj, 'product', 2, generators)),
        bracket=StructureTable(reader.table(obj, 'bracket', 2, generators)),
        differential=StructureTable(reader.table(obj, 'differential', 1, generators)),
        max_degree=max_degree,
        name=str(obj.get('name') or os.path.splitext(os.path.basename(source))[0]),
    )
    errors = homogeneity_errors(algebra)
    if errors:
        field = errors[0].split('(', 1)[0]
        raise SpecFormatError(f'inhomogeneous structure constant: {errors[0]}', line=_line_of(text, field),
                              field=field)
    logger.info(f'Loaded {algebra.name} from {source}: {len(generators)} generators, (a,b)=({a},{b})')
    return algebra


def load_algebra(path: str, max_degree: Optional[int] = None) -> AbAlgebra:
    with open(path, 'r', encoding='utf-8') as f:
        text = f.read()
    return parse_algebra(text, max_degree=max_degree, source=path)


__all__ = ['parse_algebra', 'load_algebra']
