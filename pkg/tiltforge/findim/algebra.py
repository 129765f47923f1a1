"""Basis and multiplication table of kQ/(R), built one weight slice at a time."""

import logging
import random
from collections import defaultdict
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from ..errors import DimensionBoundExceeded, PresentationException
from ..helpers import add_scaled, linalg, to_dense
from ..models import AlgebraTable, BasisElement, CartanMatrix, GradedPresentation, Path, Vector
from ..presentation import path_degree, validate_presentation
from .radical import nilpotency_index

logger = logging.getLogger(__name__)

Word = Tuple[int, str]


def default_length_bound(pres: GradedPresentation) -> int:
    return max(2 * pres.vertex_count, 1)


def grading_of(pres: GradedPresentation) -> str:
    """'length' for length-homogeneous relations, 'degree' for presentations with composite arrows.

    Raises:
        ``PresentationException``
    """
    report = validate_presentation(pres)
    if report.valid:
        return 'length'
    relaxed = validate_presentation(pres, require_length=False)
    if relaxed.valid and all(pres.degree(arrow.id) > 0 for arrow in pres.quiver.arrows):
        return 'degree'
    raise PresentationException('Invalid presentation: ' + report.first_problem)


def build_algebra(pres: GradedPresentation, length_bound: Optional[int] = None) -> AlgebraTable:
    """Builds the finite-dimensional algebra presented by pres.

    Slice n is spanned by words (b, a) with b a basis element and a an arrow of
    total weight n, modulo u·r for every relation r and basis element u of total
    weight n. Pivots of the echelon form are taken on the largest words, so the
    kept basis consists of the lexicographically smallest paths.

    Args:
        pres (``GradedPresentation``): A valid presentation.
        length_bound (``int``): Paths of this weight must vanish. Defaults to twice
            the number of vertices, times the largest arrow degree when slicing by degree.

    Returns:
        ``AlgebraTable``

    Raises:
        ``PresentationException``
        ``DimensionBoundExceeded``: carrying the partial table.
    """
    graded_by = grading_of(pres)
    if any(relation.length == 0 for relation in pres.relations):
        raise PresentationException('Relations between trivial paths are not supported')

    quiver = pres.quiver

    def arrow_weight(arrow_id: str) -> int:
        return pres.degree(arrow_id) if graded_by == 'degree' else 1

    max_weight = max((arrow_weight(arrow.id) for arrow in quiver.arrows), default=1)
    bound = length_bound or default_length_bound(pres) * max_weight

    elements: List[BasisElement] = []
    units: Dict[str, int] = {}
    for vertex in quiver.vertices:
        units[vertex] = len(elements)
        elements.append(BasisElement(len(elements), Path(vertex, vertex), 0, 0))
    by_weight = {0: list(range(len(elements)))}

    relations_by_weight = defaultdict(list)
    for relation in pres.relations:
        path = relation.terms[0][1]
        weight = path_degree(pres, path) if graded_by == 'degree' else path.length
        relations_by_weight[weight].append(relation)

    def live(n: int) -> bool:
        return any(by_weight.get(k) for k in range(max(0, n - max_weight), n))

    steps: List[Dict[Word, Vector]] = [{}]
    n = 1
    while n <= bound and live(n):
        partial = AlgebraTable(pres, tuple(elements), {}, units, tuple(steps), False, graded_by)
        words = [(b, arrow.id) for arrow in quiver.arrows
                 for b in by_weight.get(n - arrow_weight(arrow.id), [])
                 if elements[b].target == arrow.source]
        images = _relation_images(partial, relations_by_weight, n)

        step: Dict[Word, Vector] = {}
        current = []
        blocks = defaultdict(list)
        for word in words:
            blocks[(elements[word[0]].source, quiver.arrow(word[1]).target)].append(word)

        for key in sorted(blocks, key=lambda k: (quiver.index(k[0]), quiver.index(k[1]))):
            block = sorted(blocks[key], key=lambda w: _word_key(partial, w), reverse=True)
            rows = [to_dense(image, block) for image in images.get(key, [])]
            reduced, pivots = linalg.rref(rows, len(block))

            free = [k for k in range(len(block)) if k not in pivots]
            new_index = {}
            for k in reversed(free):
                b, arrow_id = block[k]
                base = elements[b].path
                path = Path(base.source, quiver.arrow(arrow_id).target, base.arrows + (arrow_id,))
                new_index[k] = len(elements)
                elements.append(BasisElement(len(elements), path, path.length, path_degree(pres, path)))
                current.append(new_index[k])
                step[block[k]] = {new_index[k]: Fraction(1)}
            for row, pivot in zip(reduced, pivots):
                step[block[pivot]] = {new_index[k]: -row[k] for k in free if row[k]}

        steps.append(step)
        by_weight[n] = current
        logger.debug('Slice %d: %d words, %d basis elements', n, len(words), len(current))
        n += 1

    if live(n):
        table = AlgebraTable(pres, tuple(elements), {}, units, tuple(steps), False, graded_by)
        raise DimensionBoundExceeded(
            'dimension bound exceeded at path length %d; algebra may be infinite-dimensional' % bound,
            table)

    table = AlgebraTable(pres, tuple(elements), {}, units, tuple(steps), True, graded_by)
    mult = {}
    for x in elements:
        for y in elements:
            if x.target != y.source:
                continue
            product: Vector = {x.index: Fraction(1)}
            for arrow_id in y.path.arrows:
                product = table.extend(product, arrow_id)
                if not product:
                    break
            if product:
                mult[(x.index, y.index)] = product

    logger.info('Built algebra of dimension %d on %d vertices', len(elements), pres.vertex_count)
    return AlgebraTable(pres, tuple(elements), mult, units, tuple(steps), True, graded_by)


def _word_key(table: AlgebraTable, word: Word) -> Tuple[int, ...]:
    base = table.elements[word[0]].path
    quiver = table.presentation.quiver
    return quiver.path_key(Path(base.source, quiver.arrow(word[1]).target, base.arrows + (word[1],)))


def _relation_images(table: AlgebraTable, relations_by_weight, n: int) -> Dict[Tuple[str, str], List[Dict]]:
    """u·r in word coordinates, for relations r and basis elements u of total weight n."""
    images = defaultdict(list)
    quiver = table.presentation.quiver
    for weight, relations in relations_by_weight.items():
        if weight > n:
            continue
        prefixes = table.of_weight(n - weight)
        for relation in relations:
            target = quiver.arrow(relation.terms[0][1].arrows[-1]).target
            for u in prefixes:
                if u.target != relation.source:
                    continue
                image: Dict[Word, Fraction] = {}
                for coefficient, path in relation.terms:
                    prefix: Vector = {u.index: Fraction(1)}
                    for arrow_id in path.arrows[:-1]:
                        prefix = table.extend(prefix, arrow_id)
                    last = path.arrows[-1]
                    add_scaled(image, {(b, last): c for b, c in prefix.items()}, coefficient)
                if image:
                    images[(u.source, target)].append(image)
    return images


def dimension(tab: AlgebraTable) -> int:
    return len(tab.elements)


def cartan_matrix(tab: AlgebraTable) -> CartanMatrix:
    """Entry (i, j) counts basis elements running from vertex i to vertex j."""
    vertices = tab.vertices
    counts = defaultdict(int)
    for element in tab.elements:
        counts[(element.source, element.target)] += 1
    return CartanMatrix(vertices, tuple(tuple(counts[(a, b)] for b in vertices) for a in vertices))


def is_associative(tab: AlgebraTable, sample: Optional[int] = None, seed: int = 0) -> bool:
    """Checks (xy)z = x(yz) on all composable basis triples, or on a random sample of them."""
    elements = tab.elements
    triples = [(x.index, y.index, z.index) for x in elements for y in elements for z in elements
               if x.target == y.source and y.target == z.source]
    if sample is not None and sample < len(triples):
        triples = random.Random(seed).sample(triples, sample)
    for x, y, z in triples:
        left = tab.multiply(tab.product(x, y), {z: Fraction(1)})
        right = tab.multiply({x: Fraction(1)}, tab.product(y, z))
        if left != right:
            return False
    return True


def table_summary(tab: AlgebraTable) -> Dict:
    by_length = defaultdict(int)
    for element in tab.elements:
        by_length[element.length] += 1
    return {
        'dimension': dimension(tab),
        'basis_by_length': [by_length[k] for k in range(tab.top_length + 1)],
        'cartan': {'vertices': list(tab.vertices), 'matrix': cartan_matrix(tab).as_lists()},
        'nilpotency_index': nilpotency_index(tab),
    }
