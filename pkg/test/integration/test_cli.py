"""
Command line tests (click CliRunner).
"""

import io
import json

import pandas as pd
import pytest
from click.testing import CliRunner

from src.cli import cli, run_command
from src.coding.container import HEADER_SIZE, parse_codeword

QUIET = ['--log-level', 'ERROR']
CODE = ['--n', '12', '--r', '2', '--d', '3', '--seed', '0']


@pytest.fixture
def runner():
    return CliRunner(mix_stderr=False)


@pytest.fixture
def container(runner, tmp_path):
    path = tmp_path / 'x.sldc'
    result = runner.invoke(cli, QUIET + ['encode'] + CODE + ['--support', '2 6', '--out', str(path)])
    assert result.exit_code == 0, result.stderr
    return path


# ==================== bounds ====================

def test_bounds_json(runner):
    result = runner.invoke(cli, QUIET + ['bounds', '--n', '12', '--r', '2', '--d', '3'])
    assert result.exit_code == 0
    data = json.loads(result.stdout)
    assert data['M'] == 3
    assert data['lower_lym'] == 2.0


def test_bounds_csv_header(runner):
    result = runner.invoke(cli, QUIET + ['bounds', '--n', '12', '--r', '2', '--d', '3', '--format', 'csv'])
    frame = pd.read_csv(io.StringIO(result.stdout))
    assert result.stdout.startswith('n,r,d,block_error_eps,')
    assert frame.loc[0, 'M'] == 3


def test_bounds_xlsx_goes_to_output_dir(runner, tmp_path, monkeypatch):
    monkeypatch.setenv('LDSC_OUTPUT_DIR', str(tmp_path / 'reports'))
    result = runner.invoke(cli, QUIET + ['bounds', '--n', '12', '--r', '2', '--d', '3', '--format', 'xlsx'])
    assert result.exit_code == 0
    assert (tmp_path / 'reports' / 'bounds.xlsx').exists()
    assert 'Report written to' in result.stderr


def test_bounds_invalid_parameters_exit_code(runner):
    result = runner.invoke(cli, QUIET + ['bounds', '--n', '5', '--r', '6', '--d', '1'])
    assert result.exit_code == 3
    assert result.stderr.startswith('Error:')


# ==================== encode / query / decode ====================

def test_encode_writes_container(container):
    header, c = parse_codeword(container.read_bytes())
    assert (header.n, header.r, header.d, header.master_seed) == (12, 2, 3, 0)
    assert c.length >= 7


def test_encode_to_stdout_from_stdin(runner, container):
    result = runner.invoke(cli, QUIET + ['encode'] + CODE, input='6 2\n')
    assert result.exit_code == 0
    assert result.stdout_bytes == container.read_bytes()
    assert len(result.stdout_bytes) > HEADER_SIZE


def test_query_every_index_matches_source(runner, container):
    for j in range(1, 13):
        result = runner.invoke(cli, QUIET + ['query', str(container), '--j', str(j)])
        assert result.exit_code == 0, result.stderr
        data = json.loads(result.stdout)
        assert data['bit'] == int(j in (2, 6))
        assert data['trace']['probes'] in (0, 3)


def test_query_out_of_range(runner, container):
    result = runner.invoke(cli, QUIET + ['query', str(container), '--j', '13'])
    assert result.exit_code != 0
    assert 'Error:' in result.stderr


def test_decode(runner, container):
    result = runner.invoke(cli, QUIET + ['decode', str(container)])
    assert result.exit_code == 0
    assert result.stdout == '2 6\n'


def test_decode_corrupt_container(runner, tmp_path):
    path = tmp_path / 'bad.sldc'
    path.write_bytes(b'XXXX' + b'\x00' * 40)
    result = runner.invoke(cli, QUIET + ['decode', str(path)])
    assert result.exit_code == 21


def test_encode_wrong_weight(runner):
    result = runner.invoke(cli, QUIET + ['encode'] + CODE + ['--support', '1 2 3'])
    assert result.exit_code == 3


# ==================== bench / speedlimit / verify ====================

def test_bench_mc_json(runner):
    result = runner.invoke(cli, QUIET + ['bench', 'mc'] + CODE + ['--trials', '50'])
    assert result.exit_code == 0, result.stderr
    data = json.loads(result.stdout)
    assert data['trials'] == 50
    assert data['sandwich_passed'] is True


def test_bench_mc_needs_n(runner):
    result = runner.invoke(cli, QUIET + ['bench', 'mc', '--r', '2', '--d', '3'])
    assert result.exit_code == 2


def test_bench_scaling_csv(runner, tmp_path):
    out = tmp_path / 'scaling.csv'
    result = runner.invoke(cli, QUIET + ['bench', 'scaling', '--r', '1', '--d', '1', '--trials', '20',
                                         '--n-grid', '16,64,256,1024', '--format', 'csv', '--out', str(out)])
    assert result.exit_code == 0, result.stderr
    frame = pd.read_csv(out)
    assert frame['n'].tolist() == [16, 64, 256, 1024]
    assert {'slope', 'target_exponent', 'mean'} <= set(frame.columns)


def test_bench_exhaustive(runner):
    result = runner.invoke(cli, QUIET + ['bench', 'exhaustive', '--n', '6', '--r', '1', '--d', '1'])
    assert json.loads(result.stdout)['passed'] is True


def test_speedlimit_single_run(runner):
    result = runner.invoke(cli, QUIET + ['speedlimit'] + CODE + ['--support', '2 6', '--i', '2'])
    assert result.exit_code == 0, result.stderr
    data = json.loads(result.stdout)
    assert data['answer'] == 1
    assert len(data['rounds']) == 3


def test_speedlimit_needs_both_single_run_options(runner):
    result = runner.invoke(cli, QUIET + ['speedlimit'] + CODE + ['--i', '2'])
    assert result.exit_code == 2


def test_speedlimit_experiment(runner):
    result = runner.invoke(cli, QUIET + ['speedlimit'] + CODE + ['--trials', '30'])
    data = json.loads(result.stdout)
    assert data['all_correct'] is True
    assert data['trials'] == 30


def test_verify_several_seeds(runner):
    result = runner.invoke(cli, QUIET + ['verify', '--n', '8', '--r', '2', '--d', '2',
                                         '--seed', '0', '--seed', '1', '--protocol'])
    assert result.exit_code == 0
    data = json.loads(result.stdout)
    assert [report['master_seed'] for report in data] == [0, 1]
    assert all(report['passed'] for report in data)


def test_verify_guard(runner):
    result = runner.invoke(cli, QUIET + ['verify', '--n', '1000', '--r', '3', '--d', '2'])
    assert result.exit_code == 13


# ==================== run_command ====================

def test_run_command_status(capsys):
    assert run_command(QUIET + ['bounds', '--n', '12', '--r', '2', '--d', '3']) == 0
    assert json.loads(capsys.readouterr().out)['M'] == 3


def test_run_command_usage_error(capsys):
    assert run_command(['bounds', '--n', '12']) == 2
    assert 'Missing option' in capsys.readouterr().err


def test_run_command_domain_error():
    assert run_command(QUIET + ['bounds', '--n', '5', '--r', '6', '--d', '1']) == 3
