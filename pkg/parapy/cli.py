"""Command-line front end.

Exit codes: 0 success, 1 usage / parse / label errors, 2 theorem violation, nonexistence, params
mismatch, an incomplete parallel evaluation or a failed suite, 3 I/O errors, 4 shell capacity
exceeded. Data goes to stdout or the output path, diagnostics to stderr.
"""
from __future__ import annotations

import json
import logging
import sys
from contextlib import contextmanager
from typing import Iterator, Optional

import click

from parapy.framework.config import OUTPUT_FORMATS, RunConfig
from parapy.framework.errors import CapacityError, ConfigError, EvaluationError, ExpressionParseError, \
    IndexRangeError, InvalidLabelError, NonDominantWeightError, NonexistenceError, ParamsMismatchError, ParityError, \
    StateFileError, SuiteFailedError, TheoremViolationError
from parapy.framework.fock import shell_size
from parapy.framework.saver import write_atomic
from parapy.framework.scalar import rational
from parapy.framework.signature import OspSignature, osp_positive_roots, osp_simple_roots, rho, \
    signature_bijection, so_positive_roots, weyl_dim
from parapy.framework.suite import SuiteConfig, SuiteResult
from parapy.instances.decomposers.lwhw import build_lwhw_vector
from parapy.instances.decomposers.table import joint_lw_hw_table
from parapy.instances.operators.expression import apply_expression
from parapy.instances.savers.state import dumps_state, loads_state, state_to_dict
from parapy.instances.suites import SUITES

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VIOLATION = 2
EXIT_IO = 3
EXIT_CAPACITY = 4


@contextmanager
def exit_codes() -> Iterator[None]:
    try:
        yield
    except CapacityError as error:
        click.echo(f"capacity exceeded: {error}", err=True)
        sys.exit(EXIT_CAPACITY)
    except TheoremViolationError as error:
        click.echo(f"theorem violation: {error}", err=True)
        click.echo(json.dumps({"payload": error.payload,
                               "states": [state_to_dict(state) for state in error.states]}, indent=2), err=True)
        sys.exit(EXIT_VIOLATION)
    except (NonexistenceError, ParamsMismatchError, SuiteFailedError, EvaluationError) as error:
        click.echo(str(error), err=True)
        sys.exit(EXIT_VIOLATION)
    except (ConfigError, StateFileError, ExpressionParseError, IndexRangeError, InvalidLabelError, ParityError,
            NonDominantWeightError) as error:
        click.echo(str(error), err=True)
        sys.exit(EXIT_USAGE)
    except OSError as error:
        click.echo(f"I/O error: {error}", err=True)
        sys.exit(EXIT_IO)


class ParapyGroup(click.Group):
    """Runs click outside standalone mode so that usage errors map to exit code 1."""

    def main(self, args=None, prog_name=None, complete_var=None, standalone_mode=True, **extra):
        try:
            return super().main(args=args, prog_name=prog_name, complete_var=complete_var, standalone_mode=False,
                                **extra)
        except click.ClickException as error:
            error.show()
            sys.exit(EXIT_USAGE)
        except click.Abort:
            click.echo("Aborted!", err=True)
            sys.exit(EXIT_USAGE)


def _emit(text: str, output: Optional[str]) -> None:
    if output is None:
        click.echo(text, nl=not text.endswith("\n"))
    else:
        write_atomic(output, text)


def model_options(function):
    function = click.option("-p", "--order", "p", type=int, required=True, help="Green ansatz order p.")(function)
    function = click.option("-n", "n", type=int, required=True, help="Number of parabose modes (osp(1|2n)).")(function)
    return function


def run_options(function):
    function = click.option("--quiet", is_flag=True, help="Only warnings on stderr, no progress bars.")(function)
    function = click.option("--seed", type=int, default=42, show_default=True,
                            help="Seed of the random samples.")(function)
    function = click.option("--capacity", type=int, default=None,
                            help="Largest degree shell, in kets (default PARABOSE_CAPACITY or 50000).")(function)
    function = click.option("--max-degree", type=int, default=2, show_default=True,
                            help="Highest degree shell.")(function)
    return model_options(function)


@click.group(cls=ParapyGroup)
def cli() -> None:
    """Exact covariant Green ansatz for osp(1|2n): operators, decompositions and checks."""


@cli.command()
@run_options
@click.option("--format", "output_format", type=click.Choice(OUTPUT_FORMATS), default="json", show_default=True)
@click.option("-o", "--output", type=click.Path(dir_okay=False), default=None, help="Report path (default stdout).")
@click.option("--workers", type=int, default=1, show_default=True, help="Ray workers; 1 runs serially.")
def decompose(n: int, p: int, max_degree: int, capacity: Optional[int], seed: int, quiet: bool, output_format: str,
              output: Optional[str], workers: int) -> None:
    """Joint osp-lowest / gauge-highest weight table up to --max-degree."""
    with exit_codes():
        config = RunConfig(n=n, p=p, max_degree=max_degree, output_format=output_format, output_path=output,
                           capacity=capacity, seed=seed, workers=workers, quiet=quiet,
                           cli_args=click.get_current_context().params)
        config.apply_globals()
        logger = config.logger
        report = joint_lw_hw_table(config.params, max_degree, config.evaluator)
        logger.log_report(report)
        config.saver.save(report)


@cli.command()
@model_options
@click.option("--sig", "signature", required=True, help='osp signature "d;s1,...,s_{n-1}", e.g. "3;1".')
@click.option("-o", "--output", type=click.Path(dir_okay=False), default=None, help="StateFile path (default stdout).")
def lwv(n: int, p: int, signature: str, output: Optional[str]) -> None:
    """Closed-form lowest-weight vector of an osp signature, as a StateFile."""
    with exit_codes():
        config = RunConfig(n=n, p=p)
        try:
            parsed = OspSignature.parse(signature)
        except ValueError as error:
            raise ConfigError(f"[lwv] Cannot parse signature '{signature}': {error}") from error
        vector = build_lwhw_vector(config.params, parsed)
        gauge = signature_bijection(parsed, config.params)
        mu = ", ".join(str(value) for value in gauge.mu)
        click.echo(f"osp {parsed} <-> gauge {gauge}, highest weight ({mu}), {len(vector)} terms",
                   err=output is None)
        _emit(dumps_state(vector), output)


def _failures_document(result: SuiteResult) -> str:
    return json.dumps({"suite": result.name, "passed": result.passed, "failed": result.failed,
                       "failures": [{"check": failure.check, "message": failure.message,
                                     "payload": failure.payload,
                                     "states": [state_to_dict(state) for state in failure.states]}
                                    for failure in result.failures]}, indent=2, default=str) + "\n"


@cli.command()
@run_options
@click.option("--suite", type=click.Choice(sorted(SUITES)), default="all", show_default=True)
@click.option("-o", "--output", type=click.Path(dir_okay=False), default=None,
              help="Where to write failing checks (default stderr).")
@click.option("--workers", type=int, default=1, show_default=True)
def verify(n: int, p: int, max_degree: int, capacity: Optional[int], seed: int, quiet: bool, suite: str,
           output: Optional[str], workers: int) -> None:
    """Runs a suite of exact checks and prints pass / fail counts."""
    with exit_codes():
        config = RunConfig(n=n, p=p, max_degree=max_degree, capacity=capacity, seed=seed, quiet=quiet,
                           workers=workers, suite_config=SuiteConfig(name=suite),
                           cli_args=click.get_current_context().params)
        config.apply_globals()
        logger = config.logger
        result = config.suite.run()
        logger.log_suite(result)
        click.echo(f"{result.name}: passed {result.passed}, failed {result.failed}")
        if not result.ok:
            document = _failures_document(result)
            if output is None:
                click.echo(document, err=True, nl=False)
            else:
                write_atomic(output, document)
            raise SuiteFailedError(f"[verify] Suite '{suite}' failed {result.failed} checks")


@cli.command()
@click.argument("expression")
@click.argument("state_file", type=click.Path(dir_okay=False, allow_dash=True))
@click.option("-o", "--output", type=click.Path(dir_okay=False), default=None, help="StateFile path (default stdout).")
def apply(expression: str, state_file: str, output: Optional[str]) -> None:
    """Applies an operator expression (rightmost factor first) to a StateFile; "-" reads stdin."""
    with exit_codes():
        with click.open_file(state_file, "r", encoding="utf-8") as f:
            state = loads_state(f.read())
        _emit(dumps_state(apply_expression(expression, state)), output)


@cli.command()
@model_options
@click.option("--degree", type=int, default=None, help="Also report the size of this degree shell.")
def info(n: int, p: int, degree: Optional[int]) -> None:
    """Cartan data, root systems and shell dimensions."""
    with exit_codes():
        params = RunConfig(n=n, p=p).params
        spinor = tuple(rational(1, 2) for _ in range(params.q))
        lines = [f"osp(1|{2 * n}) at order p={p}: q={params.q}, eps={params.eps}, modes={params.num_modes}",
                 f"vacuum energy: {params.vacuum_energy}",
                 f"spin module dimension: {params.spin_dimension} "
                 f"(Weyl dimension {weyl_dim(p, spinor, pin_mode=not params.eps)})",
                 f"osp positive roots: {osp_positive_roots(n)}",
                 f"osp simple roots: {osp_simple_roots(n)}",
                 f"so({p}) positive roots: {so_positive_roots(p) or 'none positive'}",
                 f"so({p}) rho: ({', '.join(str(value) for value in rho(p))})"]
        if degree is not None:
            if degree < 0:
                raise ConfigError(f"[info] degree must be >= 0, got {degree}")
            lines.append(f"shell size at degree {degree}: {shell_size(params, degree)}")
        click.echo("\n".join(lines))


def main() -> None:
    logging.captureWarnings(True)
    cli()


if __name__ == "__main__":
    main()
