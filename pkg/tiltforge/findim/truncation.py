"""Presentations of idempotent truncations eBe of a finite-dimensional algebra."""

import logging
from collections import defaultdict
from fractions import Fraction
from typing import Dict, Iterable, List, Tuple

from ..errors import PreconditionException, PresentationException
from ..helpers import linalg, to_dense
from ..models import AlgebraTable, Arrow, GradedPresentation, Path, Quiver, Relation, Vector
from ..presentation import validate_presentation

logger = logging.getLogger(__name__)

Walk = Tuple[str, ...]


def _kept_vertices(tab: AlgebraTable, kept: Iterable[str]) -> Tuple[str, ...]:
    kept = set(kept)
    if not kept:
        raise PreconditionException('Cannot truncate to an empty set of vertices')
    for vertex in kept:
        tab.presentation.quiver.index(vertex)
    return tuple(v for v in tab.vertices if v in kept)


def _new_arrows(tab: AlgebraTable, vertices: Tuple[str, ...]) -> List[Tuple[Arrow, int, int]]:
    """A basis of eJe modulo (eJe)², as (arrow, basis element, weight)."""
    quiver = tab.presentation.quiver
    kept = set(vertices)
    radical = [b for b in tab.elements if b.length > 0 and b.source in kept and b.target in kept]

    squares = defaultdict(list)
    for x in radical:
        for y in radical:
            if x.target == y.source:
                z = tab.product(x.index, y.index)
                if z:
                    squares[(x.source, y.target)].append(z)

    blocks = defaultdict(list)
    for b in radical:
        blocks[(b.source, b.target)].append(b)

    chosen = []
    for (s, t), candidates in sorted(blocks.items(), key=lambda kv: (quiver.index(kv[0][0]), quiver.index(kv[0][1]))):
        candidates.sort(key=lambda b: (tab.weight(b.index), b.index))
        coordinates = [b.index for b in tab.between(s, t)]
        span = [to_dense(z, coordinates) for z in squares.get((s, t), [])]
        rows = [to_dense({b.index: Fraction(1)}, coordinates) for b in candidates]
        for k in linalg.extend_basis(span, rows, len(coordinates)):
            b = candidates[k]
            arrows = b.path.arrows
            if len(arrows) == 1:
                original = quiver.arrow(arrows[0])
                arrow = Arrow(original.id, s, t, original.label)
            else:
                label = ''.join(quiver.arrow(arrow_id).label for arrow_id in arrows)
                arrow = Arrow('~'.join(arrows), s, t, label)
            chosen.append((arrow, b.index, tab.weight(b.index)))
    return chosen


def truncate(tab: AlgebraTable, kept: Iterable[str]) -> GradedPresentation:
    """Presentation of eBe for e the sum of the idempotents at the kept vertices.

    Arrows are a basis of eJe/(eJe)², taken from the basis elements of the table;
    an arrow that is a path through removed vertices gets the joined ids of that
    path as id, the joined labels as label and its weight as degree. Relations are
    minimal generators of the kernel of the induced map onto eBe, weight by weight.

    Raises:
        ``PreconditionException``: if kept is empty or the table is partial.
    """
    if not tab.complete:
        raise PreconditionException('Cannot truncate a partial algebra table')
    vertices = _kept_vertices(tab, kept)
    chosen = _new_arrows(tab, vertices)

    quiver = Quiver(vertices, tuple(arrow for arrow, _, _ in chosen))
    weights = {arrow.id: weight for arrow, _, weight in chosen}
    images = {arrow.id: {index: Fraction(1)} for arrow, index, _ in chosen}
    ends = {arrow.id: (arrow.source, arrow.target) for arrow, _, _ in chosen}

    top = max((tab.weight(b.index) for b in tab.elements), default=0)
    ceiling = top + max(weights.values(), default=0)

    nonzero: Dict[int, List[Walk]] = defaultdict(list)
    image_of: Dict[Walk, Vector] = {}
    columns: Dict[Tuple[str, str, int], List[Walk]] = defaultdict(list)

    for weight in range(1, ceiling + 1):
        for arrow in quiver.arrows:
            step = weights[arrow.id]
            if step == weight:
                walks = [((arrow.id,), images[arrow.id])]
            elif step < weight:
                walks = []
                for prefix in nonzero.get(weight - step, []):
                    if ends[prefix[-1]][1] != arrow.source:
                        continue
                    walk = prefix + (arrow.id,)
                    if walk[1:] not in image_of or not image_of[walk[1:]]:
                        continue
                    walks.append((walk, tab.multiply(image_of[prefix], images[arrow.id])))
            else:
                continue
            for walk, image in walks:
                image_of[walk] = image
                columns[(ends[walk[0]][0], arrow.target, weight)].append(walk)
                if image:
                    nonzero[weight].append(walk)

    kernels: Dict[Tuple[str, str, int], List[List[Fraction]]] = {}
    relations: List[Relation] = []
    for weight in range(1, ceiling + 1):
        for s in vertices:
            for t in vertices:
                key = (s, t, weight)
                if key not in columns:
                    continue
                block = sorted(columns[key], key=lambda walk: quiver.path_key(Path(s, t, walk)))
                columns[key] = block
                coordinates = [b.index for b in tab.between(s, t)]
                rows = [[image_of[walk].get(c, Fraction(0)) for walk in block] for c in coordinates]
                kernel = linalg.kernel(rows, len(block))
                kernels[key] = kernel
                if not kernel:
                    continue

                generated = _generated(quiver, weights, columns, kernels, key)
                reduced, pivots = linalg.rref(generated, len(block))
                for k in linalg.extend_basis(generated, kernel, len(block)):
                    vector = linalg.reduce_against(kernel[k], reduced, pivots)
                    lead = next(x for x in vector if x)
                    terms = tuple((x / lead, Path(s, t, walk)) for x, walk in zip(vector, block) if x)
                    relations.append(Relation(terms))

    pres = GradedPresentation(quiver, weights, tuple(relations))
    report = validate_presentation(pres, require_length=False)
    if not report.valid:
        raise PresentationException('Truncation produced an invalid presentation: ' + report.first_problem)
    logger.info('Truncated to %d vertices, %d arrows, %d relations',
                len(vertices), len(quiver.arrows), len(relations))
    return pres


def _generated(quiver: Quiver, weights: Dict[str, int], columns, kernels, key) -> List[List[Fraction]]:
    """arrow·K + K·arrow inside the block key, on its surviving columns."""
    s, t, weight = key
    position = {walk: k for k, walk in enumerate(columns[key])}
    rows = []

    def embed(vector, walks, wrap):
        row = [Fraction(0)] * len(position)
        for x, walk in zip(vector, walks):
            k = position.get(wrap(walk))
            if x and k is not None:
                row[k] += x
        if any(row):
            rows.append(row)

    for arrow in quiver.arrows:
        rest = weight - weights[arrow.id]
        if rest < 1:
            continue
        if arrow.source == s and (arrow.target, t, rest) in kernels:
            inner = (arrow.target, t, rest)
            for vector in kernels[inner]:
                embed(vector, columns[inner], lambda walk: (arrow.id,) + walk)
        if arrow.target == t and (s, arrow.source, rest) in kernels:
            inner = (s, arrow.source, rest)
            for vector in kernels[inner]:
                embed(vector, columns[inner], lambda walk: walk + (arrow.id,))
    return rows
