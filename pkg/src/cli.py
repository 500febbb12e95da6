"""
LDSC command line.

Commands:
    encode      support list -> container
    query       container + index j -> bit and probe trace
    decode      container -> support list
    bounds      every bound for (n, r, d, eps)
    bench       mc | scaling | exhaustive experiments
    speedlimit  membership protocol (single run or cost experiment)
    verify      exhaustive sweep over one or more seeds

Reports go to stdout as JSON or CSV unless --out is given; xlsx reports
without --out are written to {output_dir}/{command}.xlsx.

Exit status: 0 on success, 2 on usage errors, the error's exit_code for
LDSC errors, 1 when a verification finds a failure.

Usage:
    python -m src.cli bounds --n 12 --r 2 --d 3
    python -m src.cli encode --n 12 --r 2 --d 3 --support "2 6" --out x.sldc
    python -m src.cli query x.sldc --j 2
"""

import functools
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence

import click

from src.bounds.report import bounds_report
from src.coding.codebook import get_codebook
from src.coding.codec import decode_bit, decode_full, encode
from src.coding.container import parse_codeword, serialize_codeword
from src.coding.types import CodeParams, SparseSeq
from src.core.config import ConfigManager
from src.core.constants import REPORT_FORMATS
from src.core.errors import LdscError
from src.execution.exhaustive import exhaustive_verify
from src.execution.monte_carlo import mc_expected_length
from src.execution.sandwich import sandwich_check
from src.execution.scaling import scaling_experiment
from src.export.reports import ReportExporter
from src.protocol.speedlimit import protocol_cost_experiment, run_protocol
from src.utils.error_utils import exit_code_for
from src.utils.file_utils import format_support_text, parse_support_text, read_bytes, write_bytes
from src.utils.log_utils import log_file_operation
from src.utils.logger import get_logger, setup_logging

logger = get_logger(__name__)


# ==============================================================================
# SHARED OPTIONS
# ==============================================================================

def code_options(require_n: bool = True) -> Callable:
    """--n --r --d --seed --kmax."""
    def decorator(func: Callable) -> Callable:
        options = [
            click.option('--n', 'n', type=int, required=require_n, help='Source length.'),
            click.option('--r', 'r', type=int, required=True, help='Sparsity (number of ones).'),
            click.option('--d', 'd', type=int, required=True, help='Probes per query.'),
            click.option('--seed', 'seed', type=int, default=None, help='Master seed (default: config).'),
            click.option('--kmax', 'kmax', type=int, default=None, help='Encoder search cap.'),
        ]
        for option in reversed(options):
            func = option(func)
        return func
    return decorator


def report_options(func: Callable) -> Callable:
    func = click.option('--out', 'out', type=click.Path(dir_okay=False), default=None,
                        help='Write the report to this file.')(func)
    func = click.option('--format', 'fmt', type=click.Choice(REPORT_FORMATS), default='json',
                        show_default=True, help='Report format.')(func)
    return func


def handles_errors(func: Callable) -> Callable:
    """Turn LdscError into its exit status with a one-line message on stderr."""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except LdscError as e:
            logger.debug(f"{type(e).__name__} in command", exc_info=True)
            click.echo(f"Error: {e}", err=True)
            click.get_current_context().exit(exit_code_for(e))
    return wrapper


def _seed(config: ConfigManager, seed: Optional[int]) -> int:
    return config.get_user_config('seed') if seed is None else seed


def _trials(config: ConfigManager, trials: Optional[int]) -> int:
    return config.get_user_config('trials') if trials is None else trials


def _params(config: ConfigManager, n: int, r: int, d: int,
            seed: Optional[int], kmax: Optional[int]) -> CodeParams:
    return CodeParams(n=n, r=r, d=d, master_seed=_seed(config, seed), k_max=kmax)


def _emit(config: ConfigManager, command: str, reports: Any, fmt: str, out: Optional[str]) -> None:
    exporter = ReportExporter()
    if out is None and fmt == 'xlsx':
        out = str(Path(config.get_user_config('output_dir')) / f"{command}.xlsx")
    if out is None:
        click.echo(exporter.render(reports, fmt), nl=False)
        return
    path = exporter.export(reports, fmt, out)
    click.echo(f"Report written to {path}", err=True)


# ==============================================================================
# GROUP
# ==============================================================================

@click.group()
@click.option('--log-level', default=None, help='DEBUG, INFO, WARNING, ERROR (default: config).')
@click.option('--log-format', type=click.Choice(['text', 'json']), default=None, help='Log line format.')
@click.option('--run-name', default=None, help='Also log to logs/{run_name}_{timestamp}.log.')
@click.pass_context
def cli(ctx: click.Context, log_level: Optional[str], log_format: Optional[str], run_name: Optional[str]) -> None:
    """Locally decodable source codes for sparse binary sequences."""
    config = ConfigManager.from_sources({
        'log_level': log_level,
        'log_format': log_format,
        'run_name': run_name,
    })
    setup_logging(config.get_user_config('log_level'), config.get_all_user_config())
    ctx.obj = config


# ==============================================================================
# CODEC COMMANDS
# ==============================================================================

@cli.command('encode')
@code_options()
@click.option('--support', 'support_text', default=None, help='Support list, e.g. "2 6".')
@click.option('--input', 'source', type=click.File('r'), default='-',
              help='File with the support list (default: stdin).')
@click.option('--out', 'out', type=click.Path(dir_okay=False), default=None,
              help='Container file (default: stdout).')
@click.pass_obj
@handles_errors
def encode_command(config: ConfigManager, n, r, d, seed, kmax, support_text, source, out) -> None:
    """Encode a support list into a codeword container."""
    params = _params(config, n, r, d, seed, kmax)
    text = support_text if support_text is not None else source.read()
    x = SparseSeq.from_support(n, parse_support_text(text))
    data = serialize_codeword(params, encode(params, x))
    if out is None:
        click.get_binary_stream('stdout').write(data)
    else:
        write_bytes(data, out, logger=logger)
        log_file_operation(logger, 'Saved container', out)


@cli.command('query')
@click.argument('container', type=click.Path(exists=True, dir_okay=False))
@click.option('--j', 'j', type=int, required=True, help='1-based index to decode.')
@click.option('--kmax', 'kmax', type=int, default=None, help='Search cap the codeword was encoded with.')
@click.pass_obj
@handles_errors
def query_command(config: ConfigManager, container, j, kmax) -> None:
    """Decode one bit from a container (at most d probes)."""
    header, c = parse_codeword(read_bytes(container))
    params = header.to_params(kmax)
    bit, trace = decode_bit(params, c, j)
    click.echo(ReportExporter().render({'j': j, 'bit': bit, 'trace': trace.to_dict()}, 'json'), nl=False)


@cli.command('decode')
@click.argument('container', type=click.Path(exists=True, dir_okay=False))
@click.option('--kmax', 'kmax', type=int, default=None, help='Search cap the codeword was encoded with.')
@click.pass_obj
@handles_errors
def decode_command(config: ConfigManager, container, kmax) -> None:
    """Decode a container back into its support list."""
    header, c = parse_codeword(read_bytes(container))
    x = decode_full(header.to_params(kmax), c)
    click.echo(format_support_text(list(x.support)))


# ==============================================================================
# REPORT COMMANDS
# ==============================================================================

@cli.command('bounds')
@click.option('--n', 'n', type=int, required=True)
@click.option('--r', 'r', type=int, required=True)
@click.option('--d', 'd', type=int, required=True)
@click.option('--eps', 'eps', type=float, default=0.0, show_default=True, help='Block-error rate.')
@report_options
@click.pass_obj
@handles_errors
def bounds_command(config: ConfigManager, n, r, d, eps, fmt, out) -> None:
    """Every lower and upper bound on the expected codeword length."""
    _emit(config, 'bounds', bounds_report(n, r, d, eps), fmt, out)


def _parse_grid(text: Optional[str]) -> List[int]:
    if not text:
        raise click.UsageError("scaling needs --n-grid, e.g. --n-grid 256,1024,4096,16384")
    try:
        return [int(v) for v in text.replace(',', ' ').split()]
    except ValueError as e:
        raise click.BadParameter(str(e), param_hint='--n-grid') from e


def _mc_record(params: CodeParams, trials: int, seed: int, eps: float) -> Dict[str, Any]:
    codebook = get_codebook(params)
    stats = mc_expected_length(params, trials, seed, codebook)
    sandwich = sandwich_check(params, stats, eps)
    record = {**params.to_dict(), **stats.to_dict()}
    record.update({f"sandwich_{k}": v for k, v in sandwich.to_dict().items()})
    return record


@cli.command('bench')
@click.argument('mode', type=click.Choice(['mc', 'scaling', 'exhaustive']))
@code_options(require_n=False)
@click.option('--trials', 'trials', type=int, default=None, help='Trials per point (default: config).')
@click.option('--eps', 'eps', type=float, default=0.0, show_default=True,
              help='Block-error rate for the bound sandwich (mc).')
@click.option('--n-grid', 'n_grid', default=None, help='Comma separated n values (scaling).')
@report_options
@click.pass_obj
@handles_errors
def bench_command(config: ConfigManager, mode, n, r, d, seed, kmax, trials, eps, n_grid, fmt, out) -> None:
    """Monte Carlo length, scaling exponent or exhaustive sweep."""
    seed = _seed(config, seed)
    trials = _trials(config, trials)
    config.set_runtime_config(mode, {'n': n, 'r': r, 'd': d, 'seed': seed, 'trials': trials})
    if mode == 'scaling':
        config.merge_runtime_config(mode, {'n_grid': _parse_grid(n_grid)})
    elif mode == 'mc':
        config.merge_runtime_config(mode, {'eps': eps})
    logger.debug(f"bench {mode}: {config.get_effective_config(mode)}")

    if mode == 'scaling':
        report = scaling_experiment(r, d, config.get_effective_config(mode)['n_grid'], trials, seed)
    else:
        if n is None:
            raise click.UsageError(f"bench {mode} needs --n")
        params = _params(config, n, r, d, seed, kmax)
        if mode == 'mc':
            report = _mc_record(params, trials, seed, eps)
        else:
            report = exhaustive_verify(params)
    _emit(config, f"bench_{mode}", report, fmt, out)


@cli.command('speedlimit')
@code_options()
@click.option('--trials', 'trials', type=int, default=None, help='Protocol runs (default: config).')
@click.option('--support', 'support_text', default=None, help="Bob's set S for a single run.")
@click.option('--i', 'i', type=int, default=None, help="Alice's index for a single run.")
@report_options
@click.pass_obj
@handles_errors
def speedlimit_command(config: ConfigManager, n, r, d, seed, kmax, trials, support_text, i, fmt, out) -> None:
    """Membership protocol: one transcript (--support and --i) or the cost experiment."""
    params = _params(config, n, r, d, seed, kmax)
    if (support_text is None) != (i is None):
        raise click.UsageError("a single run needs both --support and --i")
    if i is not None:
        report = run_protocol(params, parse_support_text(support_text), i)
        logger.debug("Transcript:\n" + report.to_text())
    else:
        report = protocol_cost_experiment(params, _trials(config, trials))
    _emit(config, 'speedlimit', report, fmt, out)


@cli.command('verify')
@click.option('--n', 'n', type=int, required=True)
@click.option('--r', 'r', type=int, required=True)
@click.option('--d', 'd', type=int, required=True)
@click.option('--seed', 'seeds', type=int, multiple=True, help='Master seed; repeat for several.')
@click.option('--kmax', 'kmax', type=int, default=None)
@click.option('--protocol', 'protocol', is_flag=True, help='Also run the membership protocol on every (S, i).')
@report_options
@click.pass_obj
@handles_errors
def verify_command(config: ConfigManager, n, r, d, seeds, kmax, protocol, fmt, out) -> None:
    """Exhaustive zero-error sweep; exits 1 when any check fails."""
    seeds = seeds or (config.get_user_config('seed'),)
    reports = [exhaustive_verify(_params(config, n, r, d, s, kmax), check_protocol=protocol) for s in seeds]
    _emit(config, 'verify', reports, fmt, out)
    if not all(report.passed for report in reports):
        click.get_current_context().exit(1)


# ==============================================================================
# ENTRY POINTS
# ==============================================================================

def run_command(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run one command and return its exit status instead of exiting.

    Examples:
        >>> run_command(['bounds', '--n', '12', '--r', '2', '--d', '3'])
        0
    """
    try:
        status = cli.main(args=list(argv) if argv is not None else None,
                          prog_name='ldsc', standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except click.Abort:
        click.echo("Aborted!", err=True)
        return 1
    return status if isinstance(status, int) else 0


def main() -> None:
    sys.exit(run_command())


if __name__ == '__main__':
    main()
