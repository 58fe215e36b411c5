#!/usr/bin/env python3

# Core
import json
# Third-party
from click.testing import CliRunner
import pytest
# Project
from main import cli

FOUR_LINES = '{"n": 2, "forms": [["1","0","0"],["0","1","0"],["1","1","0"],' \
        '["0","0","1"]]}'

# =========================================================================== #

@pytest.fixture
def runner() -> CliRunner:
    return CliRunner(mix_stderr=False)

# --------------------------------------------------------------------------- #

def test_report_inline(runner):
    result = runner.invoke(cli, ['report', '--input', FOUR_LINES])
    assert result.exit_code == 0
    report = json.loads(result.stdout)
    assert report['csm_arrangement']['coeffs'] == ["3", "4", "0"]
    assert report['csm_arrangement']['basis'] == 'P^k'
    assert report['arrangement']['n'] == "2"
    assert report['arrangement']['center_dim'] == "0"
    assert report['lattice']['flat_count'] == "10"
    assert report['lattice']['levels'][1]['flat_count'] == "4"
    assert report['effective'] is True

def test_report_file_text(runner, tmp_path):
    path = tmp_path / 'four_lines.json'
    path.write_text(FOUR_LINES)
    result = runner.invoke(cli, ['report', '--input', str(path),
            '--format', 'text'])
    assert result.exit_code == 0
    assert "4t^2 + 3t + 1" in result.stdout

def test_report_builtin_cone_verify(runner):
    result = runner.invoke(cli, ['report', '--builtin', 'counterexample',
            '--cone', '7', '--verify-count', '7'])
    assert result.exit_code == 0
    report = json.loads(result.stdout)
    assert report['effective'] is False
    assert report['exponent_split']['exponents'][:3] == ["5", "3", "1"]
    assert report['point_counts'][0]['status'] == 'pass'
    assert report['point_counts'][0]['p'] == "7"
    assert report['point_counts'][0]['affine_scaling_matches'] is True
    assert report['arrangement']['n'] == "9"

def test_report_builtin_params(runner):
    result = runner.invoke(cli, ['report', '--builtin', 'generic',
            '--params', 'd=6', '--params', 'n=2'])
    assert result.exit_code == 0
    assert json.loads(result.stdout)['effective'] is False

def test_report_deterministic(runner):
    first = runner.invoke(cli, ['report', '--input', FOUR_LINES])
    second = runner.invoke(cli, ['report', '--input', FOUR_LINES])
    assert first.stdout == second.stdout

# --------------------------------------------------------------------------- #

@pytest.mark.parametrize('args', [
    ['report', '--input', '{"n": 1, "forms": [["1", "1/0"]]}'],
    ['report', '--input', '{"n": 1, "forms": [["1", "1"], ["2", "2"]]}'],
    ['report', '--builtin', 'generic', '--params', 'd=0', '--params', 'n=2'],
    ['report', '--builtin', 'generic', '--params', 'd6'],
    ['report'],
    ['report', '--input', FOUR_LINES, '--builtin', 'boolean'],
    ['report', '--builtin', 'counterexample', '--cone', '7',
        '--verify-count', '3', '--budget', '10'],
])
def test_input_errors(runner, args):
    result = runner.invoke(cli, args)
    assert result.exit_code == 2
    assert "error [" in result.stderr

def test_bad_prime_exit(runner):
    result = runner.invoke(cli, ['report', '--builtin', 'counterexample',
            '--verify-count', '2'])
    assert result.exit_code == 3
    assert json.loads(result.stdout)['point_counts'][0]['status'] == \
            'bad_prime'

def test_count_mismatch_exit(runner, monkeypatch):
    import ffcount
    monkeypatch.setattr(ffcount, 'count_projective_complement',
            lambda *args, **kwargs: 0)
    result = runner.invoke(cli, ['report', '--builtin', 'boolean',
            '--params', 'n=2', '--verify-count', '5'])
    assert result.exit_code == 3
    assert "[ffcount]" in result.stderr

def test_consistency_exit(runner, monkeypatch):
    import report
    monkeypatch.setattr(report, 'reduced_poincare_from_char',
            lambda chibar: chibar)
    result = runner.invoke(cli, ['report', '--input', FOUR_LINES])
    assert result.exit_code == 4
    assert "ConsistencyError" in result.stderr

# --------------------------------------------------------------------------- #

def test_free_sweep(runner):
    result = runner.invoke(cli, ['free-sweep', '--max-n', '9'])
    assert result.exit_code == 0
    assert "exponents (1, 5, 3, 0, 0, 0, 0, 0, 0, 0)" in result.stdout

def test_free_sweep_clean(runner):
    result = runner.invoke(cli, ['free-sweep', '--max-n', '4'])
    assert result.exit_code == 0
    assert "All patterns effective" in result.stdout

def test_builtins(runner):
    result = runner.invoke(cli, ['builtins'])
    assert result.exit_code == 0
    assert [line.split()[0] for line in result.stdout.splitlines()] == \
            ['boolean', 'cone', 'counterexample', 'generic', 'pencil']
