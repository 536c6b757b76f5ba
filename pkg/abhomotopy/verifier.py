#!/usr/bin/env python
# -*- coding: utf-8 -*-

import json
import logging
import os
import time
from concurrent.futures import ThreadPoolExecutor
from itertools import product
from typing import List, Optional, Sequence, Tuple

from tqdm import tqdm

from .ab_core import AbAlgebra, check_ab_axioms, check_shifted_laws, homogeneity_errors
from .exceptions import ConfigError, TruncationOverflow
from .freemodule import Element
from .identities import Identity, ladder
from .instances import build_builtin
from .loader import load_algebra
from .models import *
from .tensor_coalgebra import Generator
from .utils import choose_pool, random_homogeneous, random_symword, random_word, seeded, small_symwords, word_tuples

logger = logging.getLogger(__name__)

# bounds on the enumerated arguments of binary and ternary identities
MULTI_ARGUMENT_WORD_LEN = 2
MULTI_ARGUMENT_LETTERS = 4
UNIT = '1'

Task = Tuple[Identity, Tuple[Element, ...], str]


class EnvelopeVerifier:

    def __init__(self, config: SuiteConfig) -> None:
        self.config = config

    def load_algebra(self) -> AbAlgebra:
        """The builtin named by the config, or the algebra spec file it points to."""
        source = self.config.algebra
        if source.endswith('.json') or os.path.isfile(source):
            if not os.path.isfile(source):
                raise ConfigError(f'algebra file not found: {source}')
            return load_algebra(source, max_degree=self.config.max_degree)
        algebra = build_builtin(source, self.config.params)
        algebra.max_degree = self.config.max_degree
        return algebra

    @staticmethod
    def describe(algebra: AbAlgebra) -> dict:
        return {'name': algebra.name, 'a': algebra.a, 'b': algebra.b, 'generators': len(algebra.generators),
                'max_degree': algebra.max_degree, 'params': algebra.params}

    def _pool(self, algebra: AbAlgebra, required: Sequence[Generator] = ()) -> List[Generator]:
        letters = algebra.letters()
        pool = choose_pool(letters, self.config.pool_size, seeded(self.config.seed, 'pool'), required,
                           avoid=[g for g in letters if g.name == UNIT])
        logger.info(f'Letter pool: {", ".join(str(g) for g in pool)}')
        return pool

    def _word_tasks(self, identity: Identity, pool: Sequence[Generator]) -> List[Task]:
        """
        Every word tuple within the length bounds, then config.samples random
        homogeneous combinations of rearranged words.
        """
        if identity.arity == 1:
            max_length = max_letters = self.config.max_word_len
        else:
            max_length = min(self.config.max_word_len, MULTI_ARGUMENT_WORD_LEN)
            max_letters = max(identity.arity, MULTI_ARGUMENT_LETTERS)
        tasks = []
        for words in word_tuples(pool, identity.arity, max_length, max_letters):
            arguments = tuple(Element.basis(w) for w in words)
            tasks.append((identity, arguments, ', '.join(str(w) for w in words)))
        if max_length < 2:
            return tasks
        for i in range(self.config.samples):
            rng = seeded(self.config.seed, f'{identity.suite}:{identity.name}:{i}')
            arguments = tuple(random_homogeneous(rng, random_word(rng, pool, max_length))
                              for _ in range(identity.arity))
            tasks.append((identity, arguments, ', '.join(f'({a})' for a in arguments)))
        return tasks

    def _sym_tasks(self, identity: Identity, pool: Sequence[Generator], shift: int) -> List[Task]:
        """
        Every SymWord within the run bounds and the identity's own caps, then
        config.samples random SymWords within the run bounds alone.
        """
        config = self.config
        max_factors = min(config.max_sym_factors, identity.max_factors or config.max_sym_factors)
        max_length = min(config.max_word_len, identity.max_factor_len or config.max_word_len)
        words = small_symwords(pool, max_factors, shift, max_length, config.max_sym_letters)
        seen = set(words)
        for i in range(config.samples):
            rng = seeded(config.seed, f'{identity.suite}:{identity.name}:{i}')
            w = random_symword(rng, pool, config.max_sym_factors, config.max_word_len, config.max_sym_letters,
                               shift)
            if w is not None and w not in seen:
                seen.add(w)
                words.append(w)
        return [(identity, (Element.basis(w),), str(w)) for w in words]

    def tasks(self, algebra: AbAlgebra, suites: Sequence[str], pool: Sequence[Generator]) -> List[Task]:
        shift = algebra.a - algebra.b
        tasks = []
        for identity in ladder(suites, algebra):
            if identity.kind == 'sym':
                tasks.extend(self._sym_tasks(identity, pool, shift))
            else:
                tasks.extend(self._word_tasks(identity, pool))
        return tasks

    def _run_task(self, algebra: AbAlgebra, task: Task) -> IdentityRecord:
        identity, arguments, instance = task
        record = IdentityRecord(identity=identity.name, instance=instance, status=Status.PASS, suite=identity.suite,
                                statement=identity.statement)
        start = time.perf_counter()
        try:
            lhs, rhs, note = identity.evaluate_elements(algebra, *arguments)
        except TruncationOverflow as e:
            record.status = Status.SKIPPED
            record.note = str(e)
        else:
            record.note = note
            if lhs != rhs:
                record.status = Status.FAIL
                record.lhs, record.rhs = str(lhs), str(rhs)
        if self.config.with_timings:
            record.wall_time_ms = round((time.perf_counter() - start) * 1000, 3)
        return record

    def run_tasks(self, algebra: AbAlgebra, tasks: List[Task]) -> List[IdentityRecord]:
        """Evaluate the tasks, in parallel when jobs > 1; records keep the task order."""
        process_bar = tqdm(total=len(tasks), desc=algebra.name, unit='identity')
        records = []
        with ThreadPoolExecutor(max_workers=self.config.jobs) as executor:
            for record in executor.map(lambda task: self._run_task(algebra, task), tasks):
                records.append(record)
                process_bar.update(1)
        process_bar.close()
        self.log_records(records)
        return records

    @staticmethod
    def log_records(records: List[IdentityRecord]) -> None:
        report = Report(records=records)
        for suite, summary in report.suites().items():
            logger.info(f'{suite}: {summary["status"]} (pass={summary[Status.PASS]} fail={summary[Status.FAIL]} '
                        f'skipped={summary[Status.SKIPPED]})')
            if summary[Status.SKIPPED] > summary[Status.PASS]:
                logger.warning(f'{suite}: truncation skipped {summary[Status.SKIPPED]} records against '
                               f'{summary[Status.PASS]} passes; raise max_poly_degree or max_degree')
        for r in records:
            if r.status == Status.FAIL:
                logger.error(f'{r.suite}/{r.identity} fails on {r.instance}: lhs={r.lhs} rhs={r.rhs}')
            elif r.status == Status.SKIPPED:
                logger.debug(f'{r.suite}/{r.identity} skipped on {r.instance}: {r.note}')

    def axiom_records(self, algebra: AbAlgebra, pool: Sequence[Generator]) -> List[IdentityRecord]:
        samples = list(product(pool, repeat=3))
        records = []
        for suite, report in ((Suite.AXIOMS, check_ab_axioms(algebra, samples)),
                              (Suite.SHIFTED_LAWS, check_shifted_laws(algebra, samples))):
            for r in report.records:
                r.suite = suite
                records.append(r)
        return records

    def cmd_check_algebra(self) -> Report:
        """The (a,b)-algebra axioms, their shifted restatement, homogeneity and instance invariants."""
        algebra = self.load_algebra()
        pool = self._pool(algebra)
        records = self.axiom_records(algebra, pool)

        errors = homogeneity_errors(algebra)
        for error in errors:
            records.append(IdentityRecord(identity='structure homogeneity', instance=error, status=Status.FAIL,
                                          suite=Suite.HOMOGENEITY, lhs=error, rhs='homogeneous'))
        if not errors:
            records.append(IdentityRecord(identity='structure homogeneity', instance='explicit entries',
                                          status=Status.PASS, suite=Suite.HOMOGENEITY))

        if algebra.invariants is not None:
            for r in algebra.invariants():
                r.suite = r.suite or Suite.INVARIANTS
                records.append(r)
        self.log_records(records)
        return Report(command=Command.CHECK_ALGEBRA, algebra=self.describe(algebra),
                      config=self.config.report_dict(), records=records)

    def cmd_verify_envelope(self) -> Report:
        """The identity ladder of the selected suites."""
        algebra = self.load_algebra()
        pool = self._pool(algebra)
        tasks = self.tasks(algebra, self.config.suites, pool)
        logger.info(f'{len(tasks)} identity instances on {algebra.name}')
        records = self.run_tasks(algebra, tasks)
        return Report(command=Command.VERIFY_ENVELOPE, algebra=self.describe(algebra),
                      config=self.config.report_dict(), records=records)

    @staticmethod
    def _mutation_candidates(algebra: AbAlgebra, rng) -> Optional[Tuple[str, str, str, str]]:
        """A seeded nonzero off-diagonal structure constant (operation, left, right, target)."""
        names = list(algebra.generators)
        pairs = [(operation, left, right) for operation in ('product', 'bracket')
                 for left, right in product(names, repeat=2) if left != right]
        rng.shuffle(pairs)
        for operation, left, right in pairs:
            table = algebra.product_table if operation == 'product' else algebra.bracket_table
            targets = sorted(t for t, c in table((left, right)).items() if c and t in algebra.generators)
            if targets:
                return operation, left, right, rng.choice(targets)
        return None

    def cmd_mutation(self) -> Report:
        """Perturb one structure constant by +1 and record whether the ladder notices."""
        algebra = self.load_algebra()
        choice = self._mutation_candidates(algebra, seeded(self.config.seed, 'mutation'))
        if choice is None:
            raise ConfigError(f'{algebra.name} has no nonzero off-diagonal structure constant to perturb')
        operation, left, right, target = choice
        mutated = algebra.perturbed(operation, left, right, target)
        logger.info(f'Mutation: {mutated.params["mutation"]}')

        pool = self._pool(mutated, required=[mutated.letter(left), mutated.letter(right)])
        suites = [s for s in self.config.suites if s in Suite.MUTATION_DETECTORS] or list(Suite.MUTATION_DETECTORS)
        records = self.axiom_records(mutated, pool) + self.run_tasks(mutated, self.tasks(mutated, suites, pool))
        detected = any(r.failed and r.suite in Suite.MUTATION_DETECTORS for r in records)
        if detected:
            logger.info('Mutation detected')
        else:
            logger.error('Mutation not detected by any identity')
        return Report(command=Command.MUTATION, algebra=self.describe(mutated), config=self.config.report_dict(),
                      records=records, extra={'mutation': mutated.params['mutation'], 'detected': detected})

    def run(self, command: str) -> Report:
        commands = {
            Command.CHECK_ALGEBRA: self.cmd_check_algebra,
            Command.VERIFY_ENVELOPE: self.cmd_verify_envelope,
            Command.MUTATION: self.cmd_mutation,
        }
        return commands[command]()

    @staticmethod
    def exit_code(report: Report) -> int:
        """Mutation runs succeed iff the mutation is detected; other runs follow the record statuses."""
        if report.command == Command.MUTATION:
            return ExitCode.OK if report.extra.get('detected') else ExitCode.FAILURE
        return report.exit_code()

    @staticmethod
    def render_json(report: Report) -> str:
        return json.dumps(report.to_dict(), indent=2, ensure_ascii=False) + '\n'

    @staticmethod
    def render_text(report: Report) -> str:
        summary = report.summary()
        algebra = report.algebra
        lines = [
            f'command: {report.command}',
            f'algebra: {algebra.get("name")} (a,b)=({algebra.get("a")},{algebra.get("b")}) '
            f'generators={algebra.get("generators")}',
            f'status: {report.status} (pass={summary[Status.PASS]} fail={summary[Status.FAIL]} '
            f'skipped={summary[Status.SKIPPED]})',
        ]
        for key, value in report.extra.items():
            lines.append(f'{key}: {value}')
        for suite, counts in report.suites().items():
            lines.append(f'  {suite}: {counts["status"]} (pass={counts[Status.PASS]} fail={counts[Status.FAIL]} '
                         f'skipped={counts[Status.SKIPPED]})')
        for r in report.records:
            if r.failed:
                lines.append(f'FAIL {r.suite}/{r.identity} on {r.instance}')
                lines.append(f'    lhs: {r.lhs}')
                lines.append(f'    rhs: {r.rhs}')
        return '\n'.join(lines) + '\n'

    def render(self, report: Report) -> str:
        if self.config.format == OutputFormat.TEXT:
            return self.render_text(report)
        return self.render_json(report)

    def export(self, report: Report, report_filename: str) -> None:
        dirname = os.path.dirname(report_filename)
        if dirname:
            os.makedirs(dirname, exist_ok=True)
        with open(report_filename, 'w', encoding='utf-8') as f:
            f.write(self.render(report))
        logger.info(f'The results are exported in {report_filename}')


__all__ = ['EnvelopeVerifier']
