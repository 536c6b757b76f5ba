#!/usr/bin/env python
# -*- coding: utf-8 -*-

import logging
import os
import sys

import click
import yaml

from abhomotopy.exceptions import AbHomotopyError
from abhomotopy.models import Command, ExitCode, OutputFormat, Suite, SuiteConfig
from abhomotopy.utils import parse_params
from abhomotopy.verifier import EnvelopeVerifier

logger = logging.getLogger(__name__)

CONFIG_SECTION = 'abhomotopy'


def read_config(path: str) -> dict:
    """The `abhomotopy` section of the YAML config; empty when the file is absent."""
    if not path or not os.path.exists(path):
        return {}
    with open(path, 'r') as f:
        try:
            config_dict = yaml.safe_load(f) or {}
        except yaml.YAMLError as exc:
            logging.error(exc)
            sys.exit(ExitCode.CONFIG_ERROR)
    section = config_dict.get(CONFIG_SECTION) or {}
    if not isinstance(section, dict):
        logging.error(f'{path}: {CONFIG_SECTION} must be a mapping')
        sys.exit(ExitCode.CONFIG_ERROR)
    return section


def suite_options(f):
    options = [
        click.option('--algebra', '-a', help='Builtin instance name or path to an algebra spec file (JSON).'),
        click.option('--param', '-P', 'params', multiple=True, help='Builder parameter k=v, repeatable.'),
        click.option('--max-word-len', '-L', type=int, help='Word length bound L.'),
        click.option('--max-sym-factors', '-N', type=int, help='Factor bound N on symmetric words.'),
        click.option('--max-sym-letters', type=int, help='Bound on the total letter count of symmetric words.'),
        click.option('--max-degree', '-M', type=int, help='Degree truncation of the generators.'),
        click.option('--seed', '-s', type=int, help='Seed of the randomized inputs.'),
        click.option('--jobs', '-j', type=int, help='Parallel workers.'),
        click.option('--samples', type=int, help='Random instances per identity.'),
        click.option('--pool-size', type=int, help='Letters drawn from the algebra for test words.'),
        click.option('--suite', 'suites', multiple=True, type=click.Choice(Suite.ALL),
                     help='Restrict to these suites, repeatable.'),
        click.option('--report', '-o', help='Write the report to this file instead of stdout.'),
        click.option('--format', 'output_format', type=click.Choice([OutputFormat.JSON, OutputFormat.TEXT]),
                     help='Report format.'),
        click.option('--with-timings/--no-timings', default=None, help='Record wall times per identity.'),
        click.option('--config', '-c', 'config_path', default='config.yaml', show_default=True,
                     help='YAML configuration file.'),
        click.option('--debug/--no-debug', default=None, help='Debug logging.'),
    ]
    for option in reversed(options):
        f = option(f)
    return f


def run(command: str, config_path, params, suites, output_format, **flags):
    section = read_config(config_path)
    debug = flags.pop('debug')
    if debug is None:
        debug = bool(section.get('debug'))

    if debug:
        logging.basicConfig(level=logging.DEBUG)
    else:
        logging.basicConfig(level=logging.INFO)

    try:
        base = SuiteConfig.from_dict(dict(section, debug=debug))
        config = base.merged(params=dict(base.params, **parse_params(params)) if params else None,
                             suites=list(suites) or None, format=output_format, **flags)
        verifier = EnvelopeVerifier(config)
        report = verifier.run(command)
    except AbHomotopyError as e:
        logger.error(e)
        sys.exit(ExitCode.CONFIG_ERROR)

    if config.report:
        verifier.export(report, config.report)
    else:
        click.echo(verifier.render(report), nl=False)
    sys.exit(verifier.exit_code(report))


@click.group()
def main():
    """Exact verifier for (a,b)-algebras and their envelope up to homotopy."""


@main.command(Command.CHECK_ALGEBRA)
@suite_options
def check_algebra(**options):
    """Check the (a,b)-algebra axioms and instance invariants."""
    run(Command.CHECK_ALGEBRA, **options)


@main.command(Command.VERIFY_ENVELOPE)
@suite_options
def verify_envelope(**options):
    """Run the identity ladder on H and S+(H[a-b])."""
    run(Command.VERIFY_ENVELOPE, **options)


@main.command(Command.MUTATION)
@suite_options
def mutation(**options):
    """Perturb one structure constant and check that the ladder notices."""
    run(Command.MUTATION, **options)


if __name__ == '__main__':
    main()
