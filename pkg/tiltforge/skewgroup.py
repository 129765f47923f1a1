"""McKay quivers of cyclic groups, their gradings and the folded Beilinson quiver."""

import logging
from math import gcd
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple, Union

from .errors import GradingException, InvalidArgumentException, PreconditionException
from .models import (Arrow, CyclicGroupData, FoldedVertex, GradedPresentation, LevelFailure, LevelledStructure,
                     Path, Quiver, Relation, natural_key)
from .presentation import path_degree, validate_presentation

logger = logging.getLogger(__name__)


def arrow_id(label: str, vertex) -> str:
    return '%s@%s' % (label, vertex)


def folded_name(vertex, level: int) -> str:
    return '%s^%d' % (vertex, level)


def mckay_quiver(g: CyclicGroupData) -> GradedPresentation:
    """McKay quiver of 1/r(a1..ad) with commutator relations, every arrow in degree 1."""
    r = g.r
    arrows = []
    for i in range(r):
        for j, a in enumerate(g.weights, start=1):
            arrows.append(Arrow(arrow_id('x%d' % j, i), str(i), str((i + a) % r), 'x%d' % j))
    quiver = Quiver(tuple(str(i) for i in range(r)), tuple(arrows))

    relations = []
    for v in range(r):
        for i in range(1, g.d + 1):
            for j in range(i + 1, g.d + 1):
                a_i, a_j = g.weights[i - 1], g.weights[j - 1]
                first = quiver.path(arrow_id('x%d' % i, v), arrow_id('x%d' % j, (v + a_i) % r))
                second = quiver.path(arrow_id('x%d' % j, v), arrow_id('x%d' % i, (v + a_j) % r))
                relations.append(Relation(((1, first), (-1, second))))

    logger.debug('McKay quiver of %s: %d arrows, %d relations', g, len(arrows), len(relations))
    return GradedPresentation(quiver, {}, tuple(relations))


def apply_grading(pres: GradedPresentation, degrees: Dict[str, int],
                  default: Optional[int] = None) -> GradedPresentation:
    """Attaches per-arrow degrees. Arrows not listed keep their degree, or take ``default``."""
    unknown = sorted(set(degrees) - {a.id for a in pres.quiver.arrows}, key=natural_key)
    if unknown:
        raise InvalidArgumentException('Grading names unknown arrows: ' + ','.join(unknown))
    merged = {}
    if default is not None:
        merged = {a.id: int(default) for a in pres.quiver.arrows}
    merged.update(degrees)
    return pres.with_degrees(merged)


class _McKayView:
    """Recovers labels x1..xd and the arrow of each label at each vertex."""

    def __init__(self, pres: GradedPresentation):
        self.pres = pres
        self.labels = sorted({a.label for a in pres.quiver.arrows}, key=natural_key)
        self.table: Dict[Tuple[str, str], Arrow] = {}
        for arrow in pres.quiver.arrows:
            key = (arrow.label, arrow.source)
            if key in self.table:
                raise GradingException('Not a McKay presentation: two arrows %s at vertex %s' % key)
            self.table[key] = arrow
        for vertex in pres.quiver.vertices:
            for label in self.labels:
                if (label, vertex) not in self.table:
                    raise GradingException('Not a McKay presentation: no arrow %s at vertex %s'
                                           % (label, vertex))

    def walk(self, start: str, labels: Iterable[str]) -> Tuple[str, int]:
        vertex, degree = start, 0
        for label in labels:
            arrow = self.table[(label, vertex)]
            degree += self.pres.degrees[arrow.id]
            vertex = arrow.target
        return vertex, degree

    def orbit_degree(self, start: str, label: str) -> int:
        vertex, degree = self.walk(start, [label])
        while vertex != start:
            vertex, step = self.walk(vertex, [label])
            degree += step
        return degree


def check_grading(pres: GradedPresentation) -> List[str]:
    """Violations of commutator homogeneity and orbit finiteness, in a stable order."""
    problems = list(validate_presentation(pres).problems)
    view = _McKayView(pres)
    for label in view.labels:
        for vertex in pres.quiver.vertices:
            if view.orbit_degree(vertex, label) <= 0:
                problems.append('orbit of %s through vertex %s has degree 0' % (label, vertex))
                break
    return problems


def gorenstein_parameter(pres: GradedPresentation) -> int:
    """Degree of the cycle x1...xd, which must not depend on the starting vertex.

    Raises:
        ``GradingException``
    """
    problems = check_grading(pres)
    if problems:
        raise GradingException('Grading invariant violated: ' + problems[0])

    view = _McKayView(pres)
    degrees = {}
    for vertex in pres.quiver.vertices:
        end, degree = view.walk(vertex, view.labels)
        if end != vertex:
            raise GradingException('The cycle %s from vertex %s is not closed'
                                   % (''.join(view.labels), vertex))
        degrees[vertex] = degree

    values = set(degrees.values())
    if len(values) != 1:
        raise GradingException('Grading not Gorenstein-consistent: cycle degrees %s'
                               % ', '.join('%s:%d' % item for item in degrees.items()))
    ell = values.pop()
    if ell < 1:
        raise GradingException('Gorenstein parameter must be positive')
    return ell


def sl_check(g: CyclicGroupData) -> bool:
    return sum(g.weights) % g.r == 0


def isolated_check(g: CyclicGroupData) -> bool:
    return all(gcd(a, g.r) == 1 for a in g.weights)


def folded_quiver(pres: GradedPresentation, ell: int, verify: bool = True) -> GradedPresentation:
    """The ell-folded quiver presenting the Beilinson algebra, graded by path length.

    Vertex (v, p) is named ``v^p``; an arrow a of degree d gives arrows ``a^p`` from
    level p to level p + d whenever p + d <= ell - 1.
    """
    if verify:
        computed = gorenstein_parameter(pres)
        if computed != ell:
            raise PreconditionException('Folding needs the Gorenstein parameter %d, got %d' % (computed, ell))
    if ell < 1:
        raise PreconditionException('Folding level must be positive: %d' % ell)

    vertices = tuple(folded_name(v, p) for p in range(ell) for v in pres.quiver.vertices)
    arrows = []
    for arrow in pres.quiver.arrows:
        degree = pres.degrees[arrow.id]
        for p in range(ell - degree):
            arrows.append(Arrow(folded_name(arrow.id, p), folded_name(arrow.source, p),
                                folded_name(arrow.target, p + degree), arrow.label))
    quiver = Quiver(vertices, tuple(arrows))

    relations = []
    for relation in pres.relations:
        degree = path_degree(pres, relation.terms[0][1])
        for p in range(ell - degree):
            terms = tuple((c, _fold_path(pres, path, p)) for c, path in relation.terms)
            relations.append(Relation(terms))

    logger.debug('Folded quiver at level %d: %d vertices, %d arrows, %d relations',
                 ell, len(vertices), len(arrows), len(relations))
    return GradedPresentation(quiver, {a.id: 1 for a in arrows}, tuple(relations))


def _fold_path(pres: GradedPresentation, path: Path, level: int) -> Path:
    ids = []
    current = level
    for step in path.arrows:
        ids.append(folded_name(step, current))
        current += pres.degrees[step]
    return Path(folded_name(path.source, level), folded_name(path.target, current), tuple(ids))


def folded_levels(pres: GradedPresentation, ell: int) -> Union[LevelledStructure, LevelFailure]:
    """s(v^p) = p on the ell-folded quiver, defined when every arrow of A has degree 1.

    Arrows of any other degree are returned as the witness of a LevelFailure.
    """
    if ell < 1:
        raise PreconditionException('Folding level must be positive: %d' % ell)
    other = tuple(a.id for a in pres.quiver.arrows if pres.degrees[a.id] != 1)
    if other:
        return LevelFailure('arrows not in degree 1', other)
    order = tuple(folded_name(v, p) for p in range(ell) for v in pres.quiver.vertices)
    s = {folded_name(v, p): p for p in range(ell) for v in pres.quiver.vertices}
    return LevelledStructure(order, s, ell - 1)


def induced_idempotent(e_vertices: Iterable[int], ell: int, r: int) -> FrozenSet[FoldedVertex]:
    vertices = set()
    for v in e_vertices:
        v = int(v)
        if not 0 <= v < r:
            raise InvalidArgumentException('Vertex %d is outside 0..%d' % (v, r - 1))
        vertices.add(v)
    return frozenset(FoldedVertex(v, p) for v in vertices for p in range(ell))


def degree_zero_part(pres: GradedPresentation) -> GradedPresentation:
    """The subquiver of degree-0 arrows with the degree-0 relations: a presentation of A_0."""
    arrows = tuple(a for a in pres.quiver.arrows if pres.degrees[a.id] == 0)
    quiver = Quiver(pres.quiver.vertices, arrows)
    relations = tuple(relation for relation in pres.relations
                      if path_degree(pres, relation.terms[0][1]) == 0)
    return GradedPresentation(quiver, {a.id: 0 for a in arrows}, relations)

