"""End to end runs of both routes on the built-in inputs.

- route A on the silting input gives 8 vertices and 14 arrows
- route B on the levelled input gives 6 vertices and 14 arrows, two of them composite
- every cross-check passes on both
- routes are refused with a named reason when a hypothesis fails
"""

import json
import re
from collections import Counter

import pytest

from tiltforge import TiltForge
from tiltforge.api import ASSUMPTIONS, TRIVIAL
from tiltforge.errors import InvalidArgumentException
from tiltforge.findim import build_algebra, dimension
from tiltforge.models import TiltReport
from tiltforge.tools import report_to_dict, report_to_text, serialize, to_json


@pytest.fixture(scope='module')
def silting_report():
    forge = TiltForge()
    return forge.cmd_tilt_a(forge.load(fixture='silting'))


@pytest.fixture(scope='module')
def levelled_report():
    forge = TiltForge()
    return forge.cmd_tilt_b(forge.load(fixture='levelled'))


def test_load_fixture(forge):
    inp = forge.load(fixture='silting')
    assert inp.e_vertices == ('0',)
    assert inp.group.r == 5
    assert inp.source == 'fixture:silting'
    assert forge.gorenstein(inp) == 2


def test_load_group_with_degrees(forge):
    inp = forge.load(r=4, weights='1,2,1', degrees={'x1@0': 1}, e_vertices='0,2')
    assert inp.e_vertices == ('0', '2')
    assert forge.gorenstein(inp) == 3


@pytest.mark.parametrize('kwargs', [
    {},
    {'fixture': 'silting', 'r': 5, 'weights': '1,2,2'},
    {'r': 5},
    {'fixture': 'nope'},
    {'fixture': 'silting', 'assume': ['smooth']},
    {'fixture': 'silting', 'e_vertices': '9'},
    {'fixture': 'silting', 'degrees': {'x9@0': 1}},
    {'r': 5, 'weights': '1,two,2'},
    {'presentation': '/nonexistent/presentation.txt'},
])
def test_load_rejects_bad_arguments(forge, kwargs):
    with pytest.raises(InvalidArgumentException):
        forge.load(**kwargs)


def test_ell_must_agree_with_grading(forge):
    with pytest.raises(InvalidArgumentException):
        forge.gorenstein(forge.load(fixture='silting', ell=3))


def test_check_silting(forge):
    report = forge.cmd_check(forge.load(fixture='silting'))
    h = report.hypotheses
    assert (h['sl'], h['isolated'], h['ell']) == (True, True, 2)
    assert h['ell_rule'] == 'degree of the cycle x1...xd'
    assert h['eA0e_prime_zero'] and h['e_primeA0e_zero'] and h['eA0e_is_k']
    assert h['levelled'] is False
    assert report.route['A'] == {'eligible': True, 'reason': None}
    assert report.route['B'] == {'eligible': False, 'reason': 'Beilinson algebra is not levelled'}
    assert report.status == 'ok'
    assert report.presentation is None


def test_check_levelled(forge):
    report = forge.cmd_check(forge.load(fixture='levelled'))
    h = report.hypotheses
    assert (h['sl'], h['isolated'], h['ell']) == (True, True, 2)
    assert h['eA0e_is_k']
    assert h['levelled'] and h['top_level'] == 3
    assert h['koszul'] == 'koszul'
    assert report.route['B']['eligible']
    assert report.route['A'] == {'eligible': False, 'reason': "l = 2 needs eA0e' = e'A0e = 0"}


def test_check_non_isolated_group(forge):
    report = forge.cmd_check(forge.load(r=4, weights='1,2,1', e_vertices='0'))
    assert report.hypotheses['isolated'] is False
    assert report.hypotheses['sl'] is True
    assert 'A/AeA finiteness not established' in report.hypotheses['notes']
    assert report.status == 'hypothesis-failure'
    assert report.exit_code == 2


def test_route_a_on_silting(silting_report):
    report = silting_report
    assert report.status == 'ok'
    assert report.route['taken'] == 'A'
    assert report.route['nabla']['vertices'] == 10
    assert report.route['nabla']['arrows'] == 20
    pres = report.presentation
    assert (pres.vertex_count, pres.arrow_count) == (8, 14)
    assert not any('~' in arrow.id for arrow in pres.quiver.arrows)
    assert '0^0' not in pres.quiver.vertices and '0^1' not in pres.quiver.vertices
    assert report.cross_checks['closed_loop_dimension']['passed']


def test_route_b_on_levelled(levelled_report):
    report = levelled_report
    assert report.status == 'ok'
    pres = report.presentation
    assert (pres.vertex_count, pres.arrow_count) == (6, 14)
    composite = sorted((a.label, a.source, a.target) for a in pres.quiver.arrows if '~' in a.id)
    assert composite == [('x1x2', '1^1', '3^0'), ('x3x4', '3^1', '1^0')]
    assert set(report.cross_checks) == {'cartan_dual', 'left_dual_gram', 'shifted_simples_gram', 'coxeter',
                                        'singular_collection', 'closed_loop_dimension'}
    assert all(check['passed'] for check in report.cross_checks.values())
    assert report.cross_checks['coxeter']['sign'] == -1


def letters(label):
    return re.findall(r'x\d', label)


def test_route_b_relations_anticommute(levelled_report):
    pres = levelled_report.presentation
    label = {arrow.id: arrow.label for arrow in pres.quiver.arrows}
    shapes = Counter()
    for relation in pres.relations:
        words = [tuple(label[a] for a in path.arrows) for _, path in relation.terms]
        assert all(len(word) == 2 for word in words)
        if len(words) == 2:
            assert [c for c, _ in relation.terms] == [1, 1]
            first, second = words
            assert first == tuple(reversed(second)) and first[0] != first[1]
            assert all(len(letters(part)) == 1 for part in first)
            shapes['anticommutator'] += 1
        else:
            assert len(words) == 1 and relation.terms[0][0] == 1
            first, second = words[0]
            if first == second:
                shapes['square'] += 1
            else:
                composite, letter = sorted((first, second), key=lambda part: -len(letters(part)))
                assert len(letters(composite)) == 2 and letters(letter)[0] in letters(composite)
                shapes['composite'] += 1
    assert shapes == {'anticommutator': 6, 'square': 4, 'composite': 4}


def test_route_b_output_rebuilds(levelled_report):
    closed = levelled_report.cross_checks['closed_loop_dimension']
    assert dimension(build_algebra(levelled_report.presentation)) == closed['expected'] == closed['presented']


def test_route_b_refused_on_silting(forge):
    report = forge.cmd_tilt_b(forge.load(fixture='silting'))
    assert report.status == 'hypothesis-failure'
    assert report.route['reason'] == 'Beilinson algebra is not levelled'
    assert report.presentation is None
    assert report.exit_code == 2


def test_route_a_refused_on_levelled(forge):
    report = forge.cmd_tilt_a(forge.load(fixture='levelled'))
    assert report.status == 'hypothesis-failure'
    assert report.presentation is None


def test_route_a_refuses_large_ell(forge):
    report = forge.cmd_tilt_a(forge.load(r=4, weights='1,1,1,1', e_vertices='0'))
    assert report.route['reason'] == 'route A needs l in {1, 2}, got 4'


def test_auto_falls_back_to_route_a(forge):
    report = forge.cmd_tilt(forge.load(fixture='silting'), 'auto')
    assert report.status == 'ok'
    assert report.route['taken'] == 'A'
    assert report.route['fallback_from']['taken'] == 'B'


def test_unknown_route(forge):
    with pytest.raises(InvalidArgumentException):
        forge.cmd_tilt(forge.load(fixture='point'), 'C')


@pytest.mark.parametrize('name', ['kronecker', 'point'])
def test_smooth_inputs_are_trivial(forge, name):
    report = forge.cmd_tilt(forge.load(fixture=name))
    assert report.status == 'trivial'
    assert report.route['message'] == TRIVIAL
    assert report.presentation is None
    assert report.exit_code == 0


def test_point_route_a_is_trivial(forge):
    report = forge.cmd_tilt_a(forge.load(fixture='point'))
    assert report.route['eligible']
    assert report.status == 'trivial'


def test_presentation_file_needs_ell(forge, tmp_path):
    path = tmp_path / 'levelled.txt'
    path.write_text(serialize(forge.load(fixture='levelled').presentation))
    with pytest.raises(InvalidArgumentException):
        forge.cmd_check(forge.load(presentation=str(path), e_vertices='0'))


def test_presentation_file_needs_assumptions(forge, tmp_path):
    path = tmp_path / 'levelled.txt'
    path.write_text(serialize(forge.load(fixture='levelled').presentation))
    report = forge.cmd_tilt_b(forge.load(presentation=str(path), e_vertices='0', ell=2))
    assert report.status == 'hypothesis-failure'
    assert report.hypotheses['sl'] is None
    assert report.hypotheses['ell_rule'] == 'given by --ell'
    assert any(note.startswith('unverified hypotheses') for note in report.hypotheses['notes'])


def test_presentation_file_with_assumptions(forge, tmp_path, levelled_report):
    path = tmp_path / 'levelled.txt'
    path.write_text(serialize(forge.load(fixture='levelled').presentation))
    report = forge.cmd_tilt_b(forge.load(presentation=str(path), e_vertices='0', ell=2, assume=ASSUMPTIONS))
    assert report.status == 'ok'
    assert report.input['assumptions'] == sorted(ASSUMPTIONS)
    assert report.presentation == levelled_report.presentation


def test_json_report_is_deterministic(forge, levelled_report):
    again = forge.cmd_tilt_b(forge.load(fixture='levelled'))
    text = to_json(report_to_dict(levelled_report))
    assert text == to_json(report_to_dict(again))
    data = json.loads(text)
    assert set(data) == {'status', 'input', 'hypotheses', 'route', 'presentation', 'cross_checks'}
    assert data['presentation']['counts'] == {'vertices': 6, 'arrows': 14,
                                              'relations': len(levelled_report.presentation.relations)}


def test_text_report(silting_report):
    text = report_to_text(silting_report)
    assert text.startswith('status: ok\n')
    assert '  closed_loop_dimension: passed\n' in text
    assert 'presentation:\n  vertex 1^0\n' in text


def test_export(forge, tmp_path):
    pres = forge.cmd_nabla(forge.load(fixture='kronecker'))
    dot, js = forge.cmd_export(pres, str(tmp_path / 'kronecker'))
    assert dot.endswith('kronecker.dot') and js.endswith('kronecker.json')
    assert (tmp_path / 'kronecker.dot').read_text().startswith('digraph "kronecker"')
    assert json.loads((tmp_path / 'kronecker.json').read_text())['counts']['arrows'] == 2


@pytest.mark.parametrize('status, code', [('ok', 0), ('trivial', 0), ('hypothesis-failure', 2),
                                          ('inconclusive', 3), ('cross-check-failure', 5)])
def test_exit_codes(status, code):
    assert TiltReport({}, status=status).exit_code == code


def test_folded_levels_cross_check(forge, levelled_report):
    report = forge.cmd_tilt_b(forge.load(r=3, weights='1,1,1', e_vertices='0'))
    assert report.route['eligible']
    assert report.hypotheses['top_level'] == 2
    assert report.cross_checks['folded_levels'] == {'passed': True, 'top_level': 2}
    assert 'folded_levels' not in levelled_report.cross_checks
