"""tilt-forge facade

Builds tilting endomorphism algebras for graded singularity categories of
cyclic quotient singularities, one method per command of the command line.
"""

import logging
import os
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import DimensionBoundExceeded, GradingException, InvalidArgumentException
from .findim import build_algebra, cartan_matrix, dimension, table_summary, truncate
from .fixtures import get_fixture
from .helpers import get_int_list, get_positive_int, get_vertex_list
from .homological import detect_levels, ext_table, koszul_check_levelled, quadratic_dual
from .models import (AlgebraTable, CartanMatrix, CyclicGroupData, GradedPresentation, LevelFailure,
                     LevelledStructure, TiltInput, TiltReport)
from .mutation import (collection_to_dict, coxeter_check, dual_order, left_dual, projective_collection,
                       restrict, shifted_simples_collection)
from .skewgroup import (apply_grading, degree_zero_part, folded_levels, folded_name, folded_quiver,
                        gorenstein_parameter, induced_idempotent, isolated_check, mckay_quiver, sl_check)
from .tools import export_dot, get_grading, parse, presentation_to_dict, to_json

logger = logging.getLogger(__name__)

ASSUMPTIONS = ('as-regular', 'as-gorenstein', 'finite-quotient')
TRIVIAL = 'zero algebra; singularity category trivial'


def _matrix_dict(matrix: CartanMatrix) -> Dict:
    return {'vertices': list(matrix.vertices), 'matrix': matrix.as_lists()}


def _by_vertex(vertices: Sequence[str], rows) -> Dict:
    return {'vertices': list(vertices), 'matrix': [list(row) for row in rows]}


class TiltForge:
    """Runs the tilting pipeline.

    Args:
        length_bound (int): Bound on path lengths when building algebras. Defaults to
            twice the number of vertices.
    """

    def __init__(self, length_bound: Optional[int] = None):
        self._length_bound = get_positive_int(length_bound, 'length_bound')

    def _build(self, pres: GradedPresentation) -> AlgebraTable:
        return build_algebra(pres, self._length_bound)

    def load(self,
        r: Optional[int] = None,
        weights=None,
        fixture: Optional[str] = None,
        presentation: Optional[str] = None,
        grading: Optional[str] = None,
        degrees: Optional[Dict[str, int]] = None,
        default_degree: Optional[int] = None,
        e_vertices=None,
        ell: Optional[int] = None,
        assume: Iterable[str] = ()) -> TiltInput:
        """Resolves command line style arguments into a graded presentation.

        Exactly one of ``fixture``, ``presentation`` (a file name) or ``r`` with
        ``weights`` selects the input. Gradings from ``grading`` (a file name) and
        ``degrees`` are applied on top of the fixture's grading.

        Raises:
            ``InvalidArgumentException``
            ``ParseException``
        """
        chosen = [name for name, value in (('fixture', fixture), ('presentation', presentation), ('r', r))
                  if value is not None]
        if len(chosen) != 1:
            raise InvalidArgumentException('Give exactly one of --fixture, --presentation or --r/--weights')
        assumptions = tuple(sorted(set(assume)))
        for flag in assumptions:
            if flag not in ASSUMPTIONS:
                raise InvalidArgumentException('Unknown assumption %s, expected one of %s'
                                               % (flag, ', '.join(ASSUMPTIONS)))

        group = None
        if fixture is not None:
            entry = get_fixture(fixture)
            group, pres, source = entry.group, entry.presentation(), 'fixture:' + fixture
            if e_vertices is None:
                e_vertices = entry.e_vertices
        elif presentation is not None:
            pres, source = parse(_read(presentation)), presentation
        else:
            if weights is None:
                raise InvalidArgumentException('--r needs --weights')
            group = CyclicGroupData.create(get_positive_int(r, 'r'), get_int_list(weights))
            pres, source = mckay_quiver(group), str(group)

        merged = get_grading(_read(grading)) if grading else {}
        merged.update(degrees or {})
        if merged or default_degree is not None:
            pres = apply_grading(pres, merged, default_degree)

        vertices = tuple(get_vertex_list(e_vertices if e_vertices is not None else []))
        for vertex in vertices:
            if not pres.quiver.has_vertex(vertex):
                raise InvalidArgumentException('Unknown e-vertex: ' + vertex)
        return TiltInput(pres, source, group, vertices, get_positive_int(ell, 'ell'), assumptions)

    def gorenstein(self, inp: TiltInput) -> int:
        """ℓ from the grading for McKay inputs; presentations from files must state it."""
        if inp.group is not None:
            ell = gorenstein_parameter(inp.presentation)
            if inp.ell is not None and inp.ell != ell:
                raise InvalidArgumentException('--ell %d disagrees with the grading, which gives %d'
                                               % (inp.ell, ell))
            return ell
        if inp.ell is None:
            raise InvalidArgumentException('Presentations read from files need --ell')
        return inp.ell

    def cmd_mckay(self, inp: TiltInput) -> GradedPresentation:
        return inp.presentation

    def cmd_nabla(self, inp: TiltInput) -> GradedPresentation:
        ell = self.gorenstein(inp)
        return folded_quiver(inp.presentation, ell, verify=inp.group is not None)

    def cmd_dual(self, pres: GradedPresentation) -> GradedPresentation:
        return quadratic_dual(pres)

    def cmd_truncate(self, pres: GradedPresentation, keep: Iterable[str]) -> GradedPresentation:
        return truncate(self._build(pres), get_vertex_list(list(keep)))

    def cmd_export(self, pres: GradedPresentation, out: str) -> Tuple[str, str]:
        """Writes ``<out>.dot`` and ``<out>.json``; returns both file names."""
        name = os.path.basename(out) or 'presentation'
        dot, js = out + '.dot', out + '.json'
        with open(dot, 'w') as handle:
            handle.write(export_dot(pres, name))
        with open(js, 'w') as handle:
            handle.write(to_json(presentation_to_dict(pres)))
        logger.info('Exported %s and %s', dot, js)
        return dot, js

    def _input_dict(self, inp: TiltInput) -> Dict:
        return {
            'source': inp.source,
            'group': str(inp.group) if inp.group else None,
            'e_vertices': list(inp.e_vertices),
            'degrees': {arrow.id: inp.presentation.degrees[arrow.id] for arrow in inp.presentation.quiver.arrows},
            'assumptions': list(inp.assumptions),
        }

    def _hypotheses(self, inp: TiltInput) -> Tuple[Dict, Optional[int], bool]:
        """Setting verdicts, ℓ and the degree-zero blocks of A_0; also says whether the setting holds."""
        hypotheses = {}
        notes = []
        if inp.group is not None:
            sl, isolated = sl_check(inp.group), isolated_check(inp.group)
            hypotheses.update({'sl': sl, 'isolated': isolated})
            setting = sl and isolated
            if not sl:
                notes.append('group not in SL: A is not Gorenstein-symmetric')
            if not isolated:
                notes.append('A/AeA finiteness not established')
        else:
            hypotheses.update({'sl': None, 'isolated': None})
            missing = [flag for flag in ASSUMPTIONS if flag not in inp.assumptions]
            setting = not missing
            if missing:
                notes.append('unverified hypotheses, pass --assume ' + ' '.join(missing))

        ell = None
        try:
            ell = self.gorenstein(inp)
        except GradingException as error:
            notes.append(error.reason)
            setting = False
        hypotheses['ell'] = ell
        hypotheses['ell_rule'] = 'degree of the cycle x1...xd' if inp.group is not None else 'given by --ell'

        e = set(inp.e_vertices)
        hypotheses.update({'eA0e_is_k': None, 'eA0e_prime_zero': None, 'e_primeA0e_zero': None})
        if not e:
            notes.append('no e-vertices given')
        try:
            a0 = self._build(degree_zero_part(inp.presentation))
        except DimensionBoundExceeded as error:
            notes.append('A_0 is infinite-dimensional: ' + error.reason)
            setting = False
            a0 = None
        if a0 is not None:
            hypotheses['a0_dimension'] = dimension(a0)
            if e:
                loops = [b for b in a0.elements if b.source in e and b.target in e]
                hypotheses['eA0e_is_k'] = len(e) == 1 and len(loops) == 1
                hypotheses['eA0e_prime_zero'] = not any(b.source not in e and b.target in e for b in a0.elements)
                hypotheses['e_primeA0e_zero'] = not any(b.source in e and b.target not in e for b in a0.elements)
        hypotheses['notes'] = notes
        return hypotheses, ell, setting

    def _route_a(self, hypotheses: Dict, ell: Optional[int], setting: bool) -> Optional[str]:
        """The reason route A does not apply, or None."""
        if not setting:
            return 'setting hypotheses not satisfied'
        if ell is None or ell >= 3:
            return 'route A needs l in {1, 2}, got %s' % ell
        blocks = [hypotheses['eA0e_prime_zero'], hypotheses['e_primeA0e_zero']]
        if ell == 2 and not all(blocks):
            return "l = 2 needs eA0e' = e'A0e = 0"
        if ell == 1 and not any(blocks):
            return "l = 1 needs eA0e' = 0 or e'A0e = 0"
        return None

    def _levels_and_koszul(self, nabla: GradedPresentation, hypotheses: Dict):
        lv = detect_levels(nabla)
        if isinstance(lv, LevelFailure):
            hypotheses.update({'levelled': False, 'levels_witness': list(lv.witness),
                               'levels_reason': lv.reason, 'koszul': None})
            return None, None, None
        tab = self._build(nabla)
        verdict = koszul_check_levelled(tab, lv)
        hypotheses.update({'levelled': True, 'top_level': lv.n,
                           'levels': {v: lv.level(v) for v in lv.order},
                           'koszul': verdict.status, 'koszul_bound': verdict.bound,
                           'koszul_witness': list(verdict.witness) if verdict.witness else None})
        return lv, tab, verdict

    def cmd_check(self, inp: TiltInput) -> TiltReport:
        """Hypothesis verdicts for both routes, without building any output."""
        hypotheses, ell, setting = self._hypotheses(inp)
        report = TiltReport(self._input_dict(inp), hypotheses)
        reason_a = self._route_a(hypotheses, ell, setting)
        reason_b = None
        if ell is None:
            reason_b = 'no Gorenstein parameter'
            hypotheses.update({'levelled': None, 'koszul': None})
        else:
            nabla = folded_quiver(inp.presentation, ell, verify=False)
            _, _, verdict = self._levels_and_koszul(nabla, hypotheses)
            reason_b = self._route_b(hypotheses, setting, verdict)
        report.route = {'A': {'eligible': reason_a is None, 'reason': reason_a},
                        'B': {'eligible': reason_b is None, 'reason': reason_b}}
        if reason_a is not None and reason_b is not None:
            inconclusive = hypotheses.get('koszul') == 'inconclusive'
            report.status = 'inconclusive' if inconclusive else 'hypothesis-failure'
        return report

    def _route_b(self, hypotheses: Dict, setting: bool, verdict) -> Optional[str]:
        if not setting:
            return 'setting hypotheses not satisfied'
        if not hypotheses.get('eA0e_is_k'):
            return 'eA0e is not k'
        if not hypotheses.get('levelled'):
            return 'Beilinson algebra is not levelled'
        if verdict is None or not verdict.is_koszul:
            return 'Beilinson algebra is not Koszul (%s)' % (verdict.status if verdict else 'unknown')
        return None

    def _kept(self, inp: TiltInput, ell: int, vertices: Sequence[str]) -> List[str]:
        """Folded vertices outside the idempotent induced by the e-vertices."""
        if inp.group is not None:
            removed = {str(v) for v in induced_idempotent([int(v) for v in inp.e_vertices], ell, inp.group.r)}
        else:
            removed = {folded_name(v, p) for v in inp.e_vertices for p in range(ell)}
        return [v for v in vertices if v not in removed]

    def cmd_tilt_a(self, inp: TiltInput) -> TiltReport:
        """(1 − ẽ)(∇A)(1 − ẽ), when the silting route applies."""
        hypotheses, ell, setting = self._hypotheses(inp)
        report = TiltReport(self._input_dict(inp), hypotheses)
        reason = self._route_a(hypotheses, ell, setting)
        report.route = {'taken': 'A', 'eligible': reason is None, 'reason': reason}
        if reason is not None:
            report.status = 'hypothesis-failure'
            return report

        nabla = folded_quiver(inp.presentation, ell, verify=False)
        tab = self._build(nabla)
        kept = self._kept(inp, ell, nabla.quiver.vertices)
        report.route['nabla'] = {'vertices': nabla.vertex_count, 'arrows': nabla.arrow_count,
                                 'summary': table_summary(tab)}
        if not kept:
            report.status = 'trivial'
            report.route['message'] = TRIVIAL
            return report

        report.presentation = truncate(tab, kept)
        report.cross_checks['closed_loop_dimension'] = self._closed_loop(tab, kept, report.presentation)
        report.status = self._status(report)
        return report

    def cmd_tilt_b(self, inp: TiltInput) -> TiltReport:
        """(1 − ẽ)(∇A)^!(1 − ẽ), when ∇A is levelled Koszul and eA₀e ≅ k."""
        hypotheses, ell, setting = self._hypotheses(inp)
        report = TiltReport(self._input_dict(inp), hypotheses)
        lv = tab = verdict = None
        if ell is not None:
            nabla = folded_quiver(inp.presentation, ell, verify=False)
            lv, tab, verdict = self._levels_and_koszul(nabla, hypotheses)
        reason = self._route_b(hypotheses, setting, verdict) if ell is not None else 'no Gorenstein parameter'
        report.route = {'taken': 'B', 'eligible': reason is None, 'reason': reason}
        if reason is not None:
            report.status = 'inconclusive' if verdict is not None and verdict.status == 'inconclusive' \
                else 'hypothesis-failure'
            return report

        dual = quadratic_dual(nabla)
        dual_tab = self._build(dual)
        kept = self._kept(inp, ell, dual.quiver.vertices)
        report.route['nabla'] = {'vertices': nabla.vertex_count, 'arrows': nabla.arrow_count,
                                 'summary': table_summary(tab)}
        report.route['dual'] = {'summary': table_summary(dual_tab)}
        report.cross_checks.update(self._koszul_dual_checks(tab, lv, verdict.bound, dual_tab, kept))
        standard = folded_levels(inp.presentation, ell) if inp.group is not None else None
        if isinstance(standard, LevelledStructure):
            report.cross_checks['folded_levels'] = {'passed': standard.s == lv.s, 'top_level': standard.n}
        if not kept:
            report.status = 'trivial'
            report.route['message'] = TRIVIAL
            return report

        report.presentation = truncate(dual_tab, kept)
        report.cross_checks['closed_loop_dimension'] = self._closed_loop(dual_tab, kept, report.presentation)
        report.status = self._status(report)
        return report

    def cmd_tilt(self, inp: TiltInput, route: str = 'auto') -> TiltReport:
        """Runs route A or B; ``auto`` prefers B and falls back to A."""
        if route == 'A':
            return self.cmd_tilt_a(inp)
        if route == 'B':
            return self.cmd_tilt_b(inp)
        if route != 'auto':
            raise InvalidArgumentException('Unknown route %s, expected auto, A or B' % route)
        report = self.cmd_tilt_b(inp)
        if report.status in ('hypothesis-failure', 'inconclusive'):
            fallback = self.cmd_tilt_a(inp)
            if fallback.status not in ('hypothesis-failure',):
                fallback.route['fallback_from'] = report.route
                return fallback
        return report

    def _status(self, report: TiltReport) -> str:
        failed = [name for name, check in report.cross_checks.items() if not check.get('passed')]
        if failed:
            logger.warning('Cross-checks failed: %s', ', '.join(sorted(failed)))
            return 'cross-check-failure'
        return 'ok'

    def _closed_loop(self, tab: AlgebraTable, kept: Sequence[str], pres: GradedPresentation) -> Dict:
        expected = sum(1 for b in tab.elements if b.source in kept and b.target in kept)
        presented = dimension(self._build(pres))
        return {'expected': expected, 'presented': presented, 'passed': expected == presented}

    def _koszul_dual_checks(self, tab: AlgebraTable, lv, bound: int, dual_tab: AlgebraTable,
                            kept: Sequence[str]) -> Dict:
        """End of the left dual of the projectives, three ways, plus the Coxeter relation."""
        cartan = cartan_matrix(dual_tab)
        projectives = projective_collection(tab, lv)
        dual = left_dual(projectives)
        positions = dual_order(projectives)
        order = [lv.order[k] for k in positions]
        expected = [[cartan.entry(a, b) for b in order] for a in order]
        checks = {
            'cartan_dual': dict(_matrix_dict(cartan), passed=True),
            'left_dual_gram': dict(_by_vertex(order, dual.chi), passed=[list(r) for r in dual.chi] == expected,
                                   collection=collection_to_dict(dual)),
        }

        simples = shifted_simples_collection(tab, lv, ext_table(tab, bound))
        reversed_order = list(reversed(lv.order))
        expected_simples = [[cartan.entry(a, b) for b in reversed_order] for a in reversed_order]
        checks['shifted_simples_gram'] = dict(
            _by_vertex(reversed_order, simples.gram),
            passed=[list(r) for r in simples.gram] == expected_simples and simples.gram == simples.chi)

        verdict = coxeter_check(projectives)
        checks['coxeter'] = {'passed': verdict.holds, 'sign': verdict.sign, 'failures': list(verdict.failures)}

        if kept:
            removed = [x for x, v in enumerate(order) if v not in kept]
            singular = restrict(dual, removed)
            remaining = [v for v in order if v in kept]
            wanted = [[cartan.entry(a, b) for b in remaining] for a in remaining]
            checks['singular_collection'] = dict(_by_vertex(remaining, singular.chi),
                                                 passed=[list(r) for r in singular.chi] == wanted)
        return checks


def _read(name: str) -> str:
    try:
        with open(name) as handle:
            return handle.read()
    except OSError as error:
        raise InvalidArgumentException('Cannot read %s: %s' % (name, error.strerror)) from error
