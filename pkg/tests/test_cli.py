import csv
import io
import json
from fractions import Fraction

import pytest
from click.testing import CliRunner

from src.etc.consts import EXIT_OK, EXIT_USAGE, EXIT_VERIFY_FAILED
from src.etc.utilities import latex_scalar
from start import cli


@pytest.fixture
def runner():
    return CliRunner()


def invoke(runner, *args):
    return runner.invoke(cli, [str(a) for a in args])


def test_bernoulli_numbers(runner):
    result = invoke(runner, 'numbers', '--family', 'bernoulli', '--q', '1/2', '--n', 2)
    assert result.exit_code == EXIT_OK, result.output
    record = json.loads(result.output)
    assert list(record) == ['q', 'family', 'order', 'items']
    assert record['q'] == '1/2'
    assert [item['value'] for item in record['items']][:2] == ['1', '-1/3']


def test_euler_numbers(runner):
    result = invoke(runner, 'numbers', '--family', 'euler', '--q', 2, '--n', 1)
    assert result.exit_code == EXIT_OK, result.output
    assert [item['value'] for item in json.loads(result.output)['items']] == ['1', '-1/2']


@pytest.mark.parametrize("q", ['1', '0', '-1'])
def test_invalid_q(runner, q):
    result = invoke(runner, 'numbers', '--family', 'bernoulli', '--q', q, '--n', 3)
    assert result.exit_code == EXIT_USAGE
    assert "q must not be 0, 1, or -1" in result.output


def test_malformed_q(runner):
    result = invoke(runner, 'numbers', '--family', 'bernoulli', '--q', 'abc')
    assert result.exit_code == EXIT_USAGE


def test_identity_polys(runner):
    result = invoke(runner, 'polys', '--family', 'identity', '--q', '1/2', '--n', 2)
    assert result.exit_code == EXIT_OK, result.output
    items = json.loads(result.output)['items']
    assert items[2]['coeffs'] == ['0', '0', '1/2']


def test_bernoulli_polys(runner):
    result = invoke(runner, 'polys', '--family', 'bernoulli', '--q', '1/2', '--n', 1)
    assert json.loads(result.output)['items'][1]['coeffs'] == ['-1/3', '1']


def test_json_is_byte_stable(runner):
    args = ('polys', '--family', 'bernoulli', '--q', '1/2', '--n', 5)
    assert invoke(runner, *args).output == invoke(runner, *args).output


def test_asc2_zero_beta(runner):
    result = invoke(runner, 'polys', '--family', 'asc2', '--alpha', 1, '--beta', 0, '--q', '1/2')
    assert result.exit_code == EXIT_USAGE


def test_asc2_shorthand(runner):
    short = invoke(runner, 'polys', '--family', 'asc2', '--a', '2/3', '--q', '1/2', '--n', 3)
    long = invoke(runner, 'polys', '--family', 'asc2', '--alpha', '2/3', '--beta', 1, '--q', '1/2', '--n', 3)
    assert short.exit_code == EXIT_OK, short.output
    assert short.output == long.output


def test_option_not_for_family(runner):
    result = invoke(runner, 'polys', '--family', 'identity', '--lambda', 2, '--q', '1/2')
    assert result.exit_code == EXIT_USAGE


def test_quasi_zero_lambda(runner):
    result = invoke(runner, 'polys', '--family', 'quasi', '--lambda', 0, '--q', '1/2')
    assert result.exit_code == EXIT_USAGE


def test_csv_and_latex_agree_with_json(runner):
    base = ('polys', '--family', 'euler', '--q', '3/5', '--n', 4)
    items = json.loads(invoke(runner, *base).output)['items']
    rows = list(csv.DictReader(io.StringIO(invoke(runner, *base, '--format', 'csv').output)))
    assert [row['coeffs'].split(' ') for row in rows] == [item['coeffs'] for item in items]
    latex = invoke(runner, *base, '--format', 'latex').output
    assert latex.count(r'\begin{tabular}') == 1
    for item in items:
        assert all(f"${latex_scalar(Fraction(c))}$" in latex for c in item['coeffs'])


def test_csv_numbers(runner):
    result = invoke(runner, 'numbers', '--family', 'bernoulli', '--q', '1/2', '--n', 2, '--format', 'csv')
    header, *rows = list(csv.reader(io.StringIO(result.output)))
    assert header == ['q', 'family', 'order', 'n', 'value']
    assert rows[1] == ['1/2', 'bernoulli', '1', '1', '-1/3']


@pytest.mark.parametrize("suite, q, n", [('appell', '3/5', 12), ('group', '2', 10), ('ortho', '-1/2', 6),
                                         ('qcore', '1/2', 8), ('limit', '2', 3)])
def test_verify_suites(runner, suite, q, n):
    result = invoke(runner, 'verify', '--suite', suite, '--q', q, '--n', n)
    assert result.exit_code == EXIT_OK, result.output
    assert f"{suite}: ok" in result.output


def test_verify_all(runner):
    result = invoke(runner, 'verify', '--suite', 'all', '--q', '3/5', '--n', 12)
    assert result.exit_code == EXIT_OK, result.output
    assert "FAILED" not in result.output


def test_ortho_report_carries_verdict(runner):
    result = invoke(runner, 'verify', '--suite', 'ortho', '--q', '1/2', '--n', 4)
    assert "adopted=fin-step" in result.output


def test_unknown_suite(runner):
    result = invoke(runner, 'verify', '--suite', 'favard', '--q', '1/2')
    assert result.exit_code == EXIT_USAGE


def test_failing_suite_exits_one(runner, monkeypatch):
    from src.suites import CheckResult
    from src.suites.qcore import Suite

    def broken(self, ctx, n):
        yield CheckResult("always wrong", False, "first failure at n=0")
    monkeypatch.setattr(Suite, 'checks', broken)
    result = invoke(runner, 'verify', '--suite', 'qcore', '--q', '1/2', '--n', 2)
    assert result.exit_code == EXIT_VERIFY_FAILED
    assert "first failure: always wrong" in result.output


def test_info(runner):
    result = invoke(runner, 'info', 'all')
    assert result.exit_code == EXIT_OK
    assert 'bernoulli' in result.output and 'ortho' in result.output
    assert 'parameters: alpha, beta' in invoke(runner, 'info', 'families').output
    assert invoke(runner, 'info', 'suites').exit_code == EXIT_OK


def test_recursion_note_does_not_gate(runner):
    result = invoke(runner, 'verify', '--suite', 'recursion', '--q', '2', '--n', 5)
    assert result.exit_code == EXIT_OK, result.output
    assert "note: bernoulli(order=1): q-difference equation with q^binom(k,2) weights: fails from n=2" in result.output
