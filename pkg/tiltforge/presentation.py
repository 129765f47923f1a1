"""Paths, degrees and validation of graded presentations."""

from typing import List

from .errors import CompositionException
from .models import GradedPresentation, Path, ValidationReport


def compose_paths(p: Path, q: Path) -> Path:
    """Concatenates p then q.

    Raises:
        ``CompositionException``: if p does not end where q starts.
    """
    if p.target != q.source:
        raise CompositionException('Cannot compose path ending at %s with path starting at %s'
                                   % (p.target, q.source))
    return Path(p.source, q.target, p.arrows + q.arrows)


def path_degree(pres: GradedPresentation, p: Path) -> int:
    return sum(pres.degree(arrow_id) for arrow_id in p.arrows)


def _path_problem(pres: GradedPresentation, path: Path) -> str:
    if not pres.quiver.has_vertex(path.source) or not pres.quiver.has_vertex(path.target):
        return 'path %s has an unknown endpoint' % path
    if path.is_trivial:
        return '' if path.source == path.target else 'trivial path with distinct endpoints'
    arrows = [pres.quiver.arrow(arrow_id) for arrow_id in path.arrows]
    if arrows[0].source != path.source or arrows[-1].target != path.target:
        return 'path %s does not match its endpoints' % path
    for first, second in zip(arrows, arrows[1:]):
        if first.target != second.source:
            return 'path %s is not composable at %s' % (path, second.id)
    return ''


def validate_presentation(pres: GradedPresentation, require_length: bool = True) -> ValidationReport:
    """Checks every relation: nonzero, composable, parallel, homogeneous in length and degree.

    Presentations with composite arrows (truncations) are only homogeneous in
    degree; pass ``require_length=False`` for those.
    """
    problems: List[str] = []
    for r, relation in enumerate(pres.relations):
        where = 'relation %d' % r
        if not any(coefficient for coefficient, _ in relation.terms):
            problems.append('%s: all coefficients are zero' % where)
            continue
        if not relation.coefficients():
            problems.append('%s: repeated terms cancel to zero' % where)
            continue

        first = relation.terms[0][1]
        for t, (_, path) in enumerate(relation.terms):
            problem = _path_problem(pres, path)
            if problem:
                problems.append('%s, term %d: %s' % (where, t, problem))
                break
            if (path.source, path.target) != (first.source, first.target):
                problems.append('%s, term %d: non-parallel paths' % (where, t))
                break
            if require_length and path.length != first.length:
                problems.append('%s, term %d: inhomogeneous relation (path length %d vs %d)'
                                % (where, t, path.length, first.length))
                break
            if path_degree(pres, path) != path_degree(pres, first):
                problems.append('%s, term %d: inhomogeneous relation (degree %d vs %d)'
                                % (where, t, path_degree(pres, path), path_degree(pres, first)))
                break

    return ValidationReport(not problems, tuple(problems))
