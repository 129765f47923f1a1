import logging
from collections import defaultdict

from ..errors import NotQuadraticException, PresentationException
from ..helpers import linalg, to_dense
from ..models import GradedPresentation, Relation, dual_arrow_id
from ..presentation import validate_presentation

logger = logging.getLogger(__name__)


def quadratic_dual(pres: GradedPresentation) -> GradedPresentation:
    """The quadratic dual on the opposite quiver.

    A length-2 path a·b pairs with b*·a* and nothing else; the dual relations
    between two vertices are the reduced echelon basis of the annihilator of the
    relations between them. Arrow degrees carry over to the dual arrows.

    Raises:
        ``NotQuadraticException``: if a relation is not of path length 2.
        ``PresentationException``
    """
    for number, relation in enumerate(pres.relations):
        if relation.length != 2:
            raise NotQuadraticException('Relation %d has path length %d, not quadratic'
                                        % (number, relation.length))
    report = validate_presentation(pres)
    if not report.valid:
        raise PresentationException('Invalid presentation: ' + report.first_problem)

    quiver = pres.quiver
    opposite = quiver.opposite()

    paths = defaultdict(list)
    for a in quiver.arrows:
        for b in quiver.arrows_from(a.target):
            dual = opposite.path(dual_arrow_id(b.id), dual_arrow_id(a.id))
            paths[(a.source, b.target)].append((a.id, b.id, dual))

    relations = defaultdict(list)
    for relation in pres.relations:
        relations[(relation.source, relation.target)].append(relation.coefficients())

    dual_relations = []
    for (u, w) in sorted(paths, key=lambda key: (quiver.index(key[1]), quiver.index(key[0]))):
        block = sorted(paths[(u, w)], key=lambda entry: opposite.path_key(entry[2]))
        coordinates = [(a, b) for a, b, _ in block]
        rows = [to_dense(r, coordinates) for r in relations.get((u, w), [])]
        for row in linalg.annihilator(rows, len(block)):
            terms = tuple((x, dual) for x, (_, _, dual) in zip(row, block) if x)
            dual_relations.append(Relation(terms))

    degrees = {dual_arrow_id(arrow.id): pres.degree(arrow.id) for arrow in quiver.arrows}
    logger.info('Quadratic dual has %d relations', len(dual_relations))
    return GradedPresentation(opposite, degrees, tuple(dual_relations))
