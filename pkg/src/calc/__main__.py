#!/usr/bin/env python3
"""
Covering-based satisfiability checker for QF_NRA conjunctions.

Usage:
    calc solve instance.smt2 [--variant closed] [--stats -] [--format json]
    calc compare benchmarks/ [--variants base,closed] [--jobs 4]
    calc verify instance.smt2 [--variant closed]
    calc fuzz --count 500 --seed 1

Exit codes:
    0  sat (or nothing to report)
    1  unsat
    2  input or usage error
    3  soundness alarm: unverified model, variant disagreement, pinned cell found satisfiable
"""

# Standard library imports
import sys

# Third-party imports
import click
from dotenv import load_dotenv

# Local imports
from ..common.errors import ParseError, SoundnessError, UsageError
from .engine import Variant
from .logger import Logger

# Load environment variables
load_dotenv()

VARIANT_NAMES = [variant.value for variant in Variant]

EXIT_SAT = 0
EXIT_UNSAT = 1
EXIT_ERROR = 2
EXIT_SOUNDNESS = 3


def _fail(message: str, code: int) -> None:
    click.echo(f"Error: {message}", err=True)
    sys.exit(code)


def _run(action):
    """Run ``action`` and map library errors to exit codes."""
    try:
        return action()
    except ParseError as e:
        _fail(e.render(), EXIT_ERROR)
    except UsageError as e:
        _fail(str(e), EXIT_ERROR)
    except SoundnessError as e:
        _fail(f"soundness check failed: {e}", EXIT_SOUNDNESS)
    except Exception as e:
        _fail(str(e), EXIT_ERROR)


def _parse_variants(text: str):
    try:
        return [Variant.parse(name) for name in text.split(",") if name.strip()]
    except UsageError as e:
        raise click.BadParameter(str(e))


def _emit_stats(text: str, target: str) -> None:
    if target == "-":
        click.echo(text, nl=False)
    else:
        with open(target, "w", encoding="utf-8") as handle:
            handle.write(text)


@click.group()
@click.option('--debug', is_flag=True, envvar='CALC_DEBUG',
              help='Enable debug output on stderr (or set CALC_DEBUG)')
@click.pass_context
def main(ctx, debug):
    """Exact satisfiability checking of polynomial constraint conjunctions."""
    ctx.obj = Logger(debug=debug)


@main.command()
@click.argument('file', type=click.Path(dir_okay=False))
@click.option('-v', '--variant', type=click.Choice(VARIANT_NAMES), default='base', envvar='CALC_VARIANT',
              show_default=True, help='Solver variant (or set CALC_VARIANT)')
@click.option('--stats', 'stats_target', metavar='PATH',
              help="Write run statistics to PATH, or to stdout with '-'")
@click.option('-f', '--format', 'fmt', type=click.Choice(['json', 'csv']), default='json',
              show_default=True, help='Statistics format')
@click.pass_obj
def solve(logger, file, variant, stats_target, fmt):
    """Decide the conjunction asserted in FILE."""
    from .frontend import StatsReport, format_model, read_instance, render, solve_formula
    from .utils import instance_name

    def action():
        script, formula = read_instance(file)
        result = solve_formula(formula, Variant.parse(variant), logger)
        click.echo(result.verdict.value)
        if result.is_sat and script.get_model:
            click.echo(format_model(formula, result.model))
        if stats_target:
            report = StatsReport.from_result(instance_name(file), result)
            _emit_stats(render([report], fmt), stats_target)
        return result

    result = _run(action)
    sys.exit(EXIT_SAT if result.is_sat else EXIT_UNSAT)


@main.command()
@click.argument('paths', nargs=-1, required=True, type=click.Path(exists=True))
@click.option('--variants', default=','.join(VARIANT_NAMES), show_default=True,
              help='Comma-separated variants to run')
@click.option('-j', '--jobs', type=click.IntRange(min=1), default=1, envvar='CALC_JOBS',
              show_default=True, help='Worker processes (or set CALC_JOBS)')
@click.option('--seed', type=int, envvar='CALC_SEED',
              help='Shuffle task submission order with this seed (or set CALC_SEED)')
@click.option('-f', '--format', 'fmt', type=click.Choice(['csv', 'json']), default='csv',
              show_default=True, help='Output format')
@click.pass_obj
def compare(logger, paths, variants, jobs, seed, fmt):
    """Run every instance under several variants and report statistics side by side."""
    from .frontend import render, run_compare
    from .utils import expand_instance_paths

    chosen = _parse_variants(variants)
    files = expand_instance_paths(paths)
    if not files:
        _fail("no .smt2 instances found", EXIT_ERROR)
    outcome = run_compare(files, chosen, jobs=jobs, seed=seed, logger=logger)
    click.echo(render(outcome.reports, fmt), nl=False)
    for message in outcome.disagreements:
        click.echo(f"DISAGREE {message}", err=True)
    sys.exit(outcome.exit_code)


@main.command()
@click.argument('file', type=click.Path(dir_okay=False))
@click.option('-v', '--variant', type=click.Choice(VARIANT_NAMES), default='closed', envvar='CALC_VARIANT',
              show_default=True, help='Solver variant whose coverings are checked')
@click.pass_obj
def verify(logger, file, variant):
    """Re-solve FILE with variables pinned inside each UNSAT cell of its coverings."""
    from .frontend import run_verify

    report = _run(lambda: run_verify(file, Variant.parse(variant), logger))
    click.echo(report.summary())
    for message in report.violations:
        click.echo(f"VIOLATION {message}", err=True)
    sys.exit(EXIT_SAT if report.ok else EXIT_SOUNDNESS)


@main.command()
@click.option('-n', '--count', type=click.IntRange(min=1), default=100, show_default=True,
              help='Number of random instances')
@click.option('--seed', type=int, default=0, envvar='CALC_SEED', show_default=True,
              help='Generator seed (or set CALC_SEED)')
@click.option('--vars', 'max_vars', type=click.IntRange(1, 6), default=3, show_default=True,
              help='Maximum number of variables')
@click.option('--degree', type=click.IntRange(min=1), default=3, show_default=True,
              help='Maximum total degree')
@click.option('--out', type=click.Path(file_okay=False),
              help='Also write the generated instances to this directory')
@click.option('-j', '--jobs', type=click.IntRange(min=1), default=1, envvar='CALC_JOBS',
              show_default=True, help='Worker processes (or set CALC_JOBS)')
@click.pass_obj
def fuzz(logger, count, seed, max_vars, degree, out, jobs):
    """Differential testing of all variants on seeded random conjunctions."""
    from .frontend import run_fuzz

    summary = _run(lambda: run_fuzz(count, seed, max_vars=max_vars, degree=degree, out=out,
                                    jobs=jobs, logger=logger))
    click.echo(summary.summary())
    sys.exit(summary.exit_code)


if __name__ == '__main__':
    main()
