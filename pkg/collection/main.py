#!/usr/bin/env python3

# Core
import logging
import sys
# Third-party
from dotenv import load_dotenv
import click
# Project
from arrangement_input import InputError, parse_input
from charpoly import ConsistencyError
from classes import free_effectivity_sweep
from count_service import CountServiceException
from exactlin import DimensionMismatchError
from ffcount import CountBudgetError
from generator import ArrangementGenerator, GeneratorError, generate, \
    load_generators
from lattice import ArrangementError, cone
from report import ReportOptions, render_json, render_text, run_report
from segre import SegreError
import settings

EXIT_OK           = 0
EXIT_INPUT        = 2
EXIT_VERIFICATION = 3
EXIT_CONSISTENCY  = 4

INPUT_ERRORS = (InputError, ArrangementError, GeneratorError,
        DimensionMismatchError, CountBudgetError, CountServiceException,
        settings.SettingsError)

# =========================================================================== #

def _fail(err: Exception, code: int) -> None:
    module = type(err).__module__
    click.echo(f"error [{module}] {type(err).__name__}: {err}", err=True)
    sys.exit(code)

# --------------------------------------------------------------------------- #

def _parse_params(pairs) -> dict:
    params = {}
    for pair in pairs:
        key, sep, value = pair.partition('=')
        if not sep or not key:
            raise InputError(f"Parameter '{pair}' is not of the form key=value")
        params[key.strip()] = value.strip()
    return params

# =========================================================================== #

@click.group()
@click.option('--log-level', default=None,
        help="Logging level, overrides HYPERARR_LOG_LEVEL.")
def cli(log_level):
    """
    Combinatorial and characteristic-class invariants of hyperplane
    arrangements.
    """
    load_dotenv()
    level = (log_level or settings.log_level()).upper()
    logging.basicConfig(level=getattr(logging, level, logging.INFO),
            format='%(asctime)s - %(levelname)s - %(message)s',
            stream=sys.stderr)

# --------------------------------------------------------------------------- #

@cli.command()
@click.option('--input', 'input_source', default=None,
        help="JSON file path or inline JSON document.")
@click.option('--builtin', default=None, help="Builtin generator name.")
@click.option('--params', multiple=True, help="Generator parameter key=value.")
@click.option('--cone', 'cone_k', type=int, default=None,
        help="Cone the arrangement by K extra coordinates.")
@click.option('--verify-count', 'verify_primes', type=int, multiple=True,
        help="Verify chibar(p) against a point count over F_p.")
@click.option('--budget', type=int, default=None,
        help="Largest number of points to enumerate per prime.")
@click.option('--format', 'output_format', type=click.Choice(['json', 'text']),
        default='json')
@click.option('--backend', type=click.Choice(['local', 'celery']), default=None,
        help="Point-count backend; celery when CELERY_BROKER_URL is set.")
def report(input_source, builtin, params, cone_k, verify_primes, budget,
        output_format, backend):
    """
    Compute every invariant of one arrangement and print the report.
    """
    try:
        if bool(input_source) == bool(builtin):
            raise InputError("Give exactly one of --input and --builtin")
        if input_source:
            arrangement = parse_input(input_source)
        else:
            arrangement = generate(builtin, _parse_params(params))
        if cone_k is not None:
            arrangement = cone(arrangement, cone_k)

        if backend is None:
            backend = 'celery' if settings.broker_url() else 'local'
        options = ReportOptions(verify_primes=tuple(verify_primes),
                budget=budget, backend=backend)
        result = run_report(arrangement, options)
    except INPUT_ERRORS as err:
        _fail(err, EXIT_INPUT)
    except (ConsistencyError, SegreError) as err:
        logging.error(f"Internal consistency failure: {err}")
        _fail(err, EXIT_CONSISTENCY)

    click.echo(render_json(result) if output_format == 'json'
            else render_text(result))

    if result.verification_failed:
        failed = [str(check.p) for check in result.point_counts
                if check.status != 'pass']
        click.echo(f"error [ffcount] point-count verification failed for " \
                f"p = {', '.join(failed)}", err=True)
        sys.exit(EXIT_VERIFICATION)

# --------------------------------------------------------------------------- #

@cli.command('free-sweep')
@click.option('--max-n', type=click.IntRange(min=1), default=8, show_default=True)
def free_sweep(max_n):
    """
    Search exponent patterns of free arrangements with at most n hyperplanes
    in P^n for a non-effective CSM class.
    """
    failures = free_effectivity_sweep(max_n)
    if not failures:
        click.echo(f"All patterns effective for n <= {max_n}")
        return
    for n, exponents, poly in failures:
        click.echo(f"n = {n}  exponents {exponents}  effectivity {poly}")

# --------------------------------------------------------------------------- #

@cli.command()
def builtins():
    """
    List the builtin arrangement generators.
    """
    load_generators()
    for name in ArrangementGenerator.names():
        doc = (ArrangementGenerator.get_generator(name).__doc__ or '').strip()
        click.echo(f"{name:<16} {' '.join(doc.split())}")

# =========================================================================== #

if __name__ == '__main__':
    cli()
