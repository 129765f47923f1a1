"""The tilt-forge command line: outputs, files, settings and exit codes.

- 0 success, 2 hypothesis failure, 3 inconclusive, 4 input error, 5 cross-check failure
- settings come from TILTFORGE_* variables, flags win
"""

import json

import pytest

from tiltforge.api import TiltForge
from tiltforge.cli import (EXIT_CROSS_CHECK, EXIT_HYPOTHESIS, EXIT_INCONCLUSIVE, EXIT_INPUT, EXIT_OK, build_parser,
                           main)
from tiltforge.errors import InvalidArgumentException
from tiltforge.models import TiltReport
from tiltforge.tools import serialize

from .conftest import kronecker


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    for name in ('TILTFORGE_FORMAT', 'TILTFORGE_LOG_LEVEL', 'TILTFORGE_LENGTH_BOUND'):
        monkeypatch.delenv(name, raising=False)


def count_lines(text, keyword):
    return sum(1 for line in text.splitlines() if line.startswith(keyword + ' '))


def test_mckay(capsys):
    assert main(['mckay', '--r', '5', '--weights', '1,2,2']) == EXIT_OK
    out = capsys.readouterr().out
    assert (count_lines(out, 'vertex'), count_lines(out, 'arrow'), count_lines(out, 'relation')) == (5, 15, 15)


def test_nabla_json(capsys):
    assert main(['nabla', '--fixture', 'levelled', '--format', 'json']) == EXIT_OK
    counts = json.loads(capsys.readouterr().out)['counts']
    assert (counts['vertices'], counts['arrows']) == (8, 24)


def test_nabla_with_grading_file(capsys, tmp_path):
    grading = tmp_path / 'grading.txt'
    grading.write_text(''.join('x%d@%d = %d\n' % (j, i, i % 2) for i in range(4) for j in range(1, 5)))
    code = main(['nabla', '--r', '4', '--weights', '1,1,3,3', '--grading', str(grading), '--format', 'json'])
    assert code == EXIT_OK
    assert json.loads(capsys.readouterr().out)['counts']['arrows'] == 24


def test_nabla_dot(capsys):
    assert main(['nabla', '--fixture', 'kronecker', '--format', 'dot']) == EXIT_OK
    assert capsys.readouterr().out.count('penwidth=2.5') == 2


def test_dual_of_kronecker(capsys):
    assert main(['dual', '--fixture', 'kronecker']) == EXIT_OK
    out = capsys.readouterr().out
    assert 'arrow x1@0^0*: 0^1 -> 0^0 @1 x1\n' in out
    assert count_lines(out, 'relation') == 0


def test_dual_of_levelled_has_positive_coefficients(capsys):
    assert main(['dual', '--fixture', 'levelled', '--format', 'json']) == EXIT_OK
    relations = json.loads(capsys.readouterr().out)['relations']
    assert relations
    assert {term['coefficient'] for relation in relations for term in relation['terms']} == {'1'}


def test_truncate_by_e_vertices(capsys):
    assert main(['truncate', '--fixture', 'silting']) == EXIT_OK
    out = capsys.readouterr().out
    assert (count_lines(out, 'vertex'), count_lines(out, 'arrow')) == (8, 14)


def test_truncate_presentation_file(capsys, tmp_path):
    path = tmp_path / 'kronecker.txt'
    path.write_text(serialize(kronecker()))
    assert main(['truncate', '--presentation', str(path), '--keep', 's,t']) == EXIT_OK
    assert count_lines(capsys.readouterr().out, 'arrow') == 2
    assert main(['truncate', '--presentation', str(path)]) == EXIT_INPUT


def test_check_exit_codes(capsys):
    assert main(['check', '--fixture', 'silting']) == EXIT_OK
    assert 'status: ok' in capsys.readouterr().out
    assert main(['check', '--r', '4', '--weights', '1,2,1', '--e', '0']) == EXIT_HYPOTHESIS


def test_tilt_exit_codes(capsys):
    assert main(['tilt', '--fixture', 'silting', '--route', 'B']) == EXIT_HYPOTHESIS
    assert main(['tilt', '--fixture', 'kronecker']) == EXIT_OK
    assert 'zero algebra; singularity category trivial' in capsys.readouterr().out


def test_tilt_json_and_out_file(tmp_path):
    out = tmp_path / 'report.json'
    assert main(['tilt', '--fixture', 'silting', '--route', 'A', '--format', 'json', '--out', str(out)]) == EXIT_OK
    data = json.loads(out.read_text())
    assert data['status'] == 'ok'
    assert data['presentation']['counts']['arrows'] == 14


def test_dot_of_trivial_report_is_an_input_error():
    assert main(['tilt', '--fixture', 'point', '--format', 'dot']) == EXIT_INPUT


def test_length_bound_makes_check_inconclusive():
    assert main(['check', '--fixture', 'levelled', '--length-bound', '2']) == EXIT_INCONCLUSIVE


@pytest.mark.parametrize('argv', [
    ['mckay', '--r', '5'],
    ['mckay', '--fixture', 'nope'],
    ['mckay', '--r', '0', '--weights', '1'],
    ['nabla', '--fixture', 'silting', '--ell', '3'],
    ['mckay', '--fixture', 'silting', '--deg', 'x1@0'],
    ['export', '--fixture', 'silting'],
    ['mckay', '--fixture', 'silting', '--log-level', 'chatty'],
])
def test_input_errors(argv, capsys):
    assert main(argv) == EXIT_INPUT
    assert capsys.readouterr().out == ''


def test_parse_error_is_reported(capsys, tmp_path):
    path = tmp_path / 'broken.txt'
    path.write_text('vertex 0\nedge a\n')
    assert main(['mckay', '--presentation', str(path)]) == EXIT_INPUT
    assert 'line 2, column 1' in capsys.readouterr().err


def test_export(tmp_path):
    stem = tmp_path / 'silting'
    assert main(['export', '--fixture', 'silting', '--out', str(stem)]) == EXIT_OK
    assert (tmp_path / 'silting.dot').exists()
    counts = json.loads((tmp_path / 'silting.json').read_text())['counts']
    assert (counts['vertices'], counts['arrows']) == (10, 20)


def test_export_presentation_file(tmp_path):
    path = tmp_path / 'kronecker.txt'
    path.write_text(serialize(kronecker()))
    stem = tmp_path / 'out'
    assert main(['export', '--presentation', str(path), '--out', str(stem)]) == EXIT_OK
    assert json.loads((tmp_path / 'out.json').read_text())['counts'] == {'vertices': 2, 'arrows': 2, 'relations': 0}


def test_format_from_environment(monkeypatch, capsys):
    monkeypatch.setenv('TILTFORGE_FORMAT', 'json')
    assert main(['mckay', '--fixture', 'point']) == EXIT_OK
    assert json.loads(capsys.readouterr().out)['counts'] == {'vertices': 1, 'arrows': 1, 'relations': 0}
    assert main(['mckay', '--fixture', 'point', '--format', 'text']) == EXIT_OK
    assert capsys.readouterr().out.startswith('vertex 0\n')


@pytest.mark.parametrize('name, value', [('TILTFORGE_FORMAT', 'yaml'), ('TILTFORGE_LOG_LEVEL', 'LOUD'),
                                         ('TILTFORGE_LENGTH_BOUND', '0')])
def test_bad_settings(monkeypatch, name, value):
    monkeypatch.setenv(name, value)
    assert main(['mckay', '--fixture', 'point']) == EXIT_INPUT


def test_length_bound_from_environment(monkeypatch):
    monkeypatch.setenv('TILTFORGE_LENGTH_BOUND', '2')
    assert main(['check', '--fixture', 'levelled']) == EXIT_INCONCLUSIVE


def test_parser_rejects_unknown_route():
    with pytest.raises(InvalidArgumentException, match="invalid choice: 'C'"):
        build_parser().parse_args(['tilt', '--fixture', 'silting', '--route', 'C'])


@pytest.mark.parametrize('argv', [
    ['tilt', '--fixture', 'silting', '--format', 'xml'],
    ['tilt', '--fixture', 'silting', '--route', 'C'],
    ['mckay', '--r', 'abc', '--weights', '1,2,2'],
    ['mckay', '--assume', 'everything'],
    ['bogus'],
    [],
])
def test_bad_arguments_are_input_errors(argv, capsys):
    assert main(argv) == EXIT_INPUT
    captured = capsys.readouterr()
    assert captured.out == ''
    assert captured.err.startswith('usage: tilt-forge')


def test_cross_check_failure_has_its_own_exit_code(monkeypatch, capsys):
    monkeypatch.setattr(TiltForge, 'cmd_tilt', lambda self, inp, route: TiltReport({}, status='cross-check-failure'))
    assert main(['tilt', '--fixture', 'levelled']) == EXIT_CROSS_CHECK
    assert 'status: cross-check-failure' in capsys.readouterr().out
