"""Minimal graded projective resolutions of simple modules.

Modules are left modules: the projective at v is spanned by the basis elements
ending at v, and an algebra element x acts on a coordinate (g, b) of a free
module by (g, b) -> (g, x·b).
"""

import logging
from collections import defaultdict
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from ..helpers import add_scaled, linalg, to_dense, to_sparse
from ..models import AlgebraTable, ProjectiveResolution, ResolutionTerm, Vector

logger = logging.getLogger(__name__)

Coordinate = Tuple[int, int]
ModuleVector = Dict[Coordinate, Fraction]
Block = Tuple[str, int]


def _block(tab: AlgebraTable, degrees: Sequence[int], coordinate: Coordinate) -> Block:
    g, b = coordinate
    return tab.elements[b].source, degrees[g] + tab.weight(b)


def _coordinates(tab: AlgebraTable, generators: Sequence[str]) -> List[Coordinate]:
    return [(g, b.index) for g, vertex in enumerate(generators)
            for b in tab.elements if b.target == vertex]


def _left_multiply(tab: AlgebraTable, x: Vector, m: ModuleVector) -> ModuleVector:
    result: ModuleVector = {}
    for (g, b), c in m.items():
        add_scaled(result, {(g, k): v for k, v in tab.multiply(x, {b: Fraction(1)}).items()}, c)
    return result


def _block_order(tab: AlgebraTable, block: Block):
    return block[1], tab.presentation.quiver.index(block[0])


def minimal_generators(tab: AlgebraTable, submodule: List[ModuleVector],
                       degrees: Sequence[int]) -> List[Tuple[Block, ModuleVector]]:
    """A homogeneous complement of J·M inside M, block by block."""
    arrows = [b for b in tab.elements if b.length == 1]
    by_block = defaultdict(list)
    radical = defaultdict(list)
    for m in submodule:
        block = _block(tab, degrees, next(iter(m)))
        by_block[block].append(m)
        for a in arrows:
            if a.target == block[0]:
                product = _left_multiply(tab, {a.index: Fraction(1)}, m)
                if product:
                    radical[_block(tab, degrees, next(iter(product)))].append(product)

    generators = []
    for block in sorted(by_block, key=lambda b: _block_order(tab, b)):
        vectors = by_block[block]
        keys = sorted({key for v in vectors + radical.get(block, []) for key in v})
        span = [to_dense(v, keys) for v in radical.get(block, [])]
        for k in linalg.extend_basis(span, [to_dense(v, keys) for v in vectors], len(keys)):
            generators.append((block, vectors[k]))
    return generators


def _syzygy(tab: AlgebraTable, generators: Sequence[str], degrees: Sequence[int],
            images: Sequence[ModuleVector]) -> List[ModuleVector]:
    """Kernel of the map sending generator g to images[g]."""
    blocks = defaultdict(list)
    for coordinate in _coordinates(tab, generators):
        blocks[_block(tab, degrees, coordinate)].append(coordinate)

    kernel = []
    for block in sorted(blocks, key=lambda b: _block_order(tab, b)):
        columns = blocks[block]
        mapped = [_left_multiply(tab, {b: Fraction(1)}, images[g]) for g, b in columns]
        keys = sorted({key for m in mapped for key in m})
        rows = [[m.get(key, Fraction(0)) for m in mapped] for key in keys]
        for vector in linalg.kernel(rows, len(columns)):
            kernel.append(to_sparse(vector, columns))
    return kernel


def min_proj_resolution(tab: AlgebraTable, simple: str, max_deg: int) -> ProjectiveResolution:
    """Resolves the simple module at a vertex up to homological degree max_deg.

    The resolution is flagged truncated when the syzygy after term max_deg is
    still nonzero.
    """
    tab.presentation.quiver.index(simple)
    terms = [ResolutionTerm((simple,), (0,), ())]
    generators, degrees = [simple], [0]
    submodule = [{(0, b.index): Fraction(1)} for b in tab.elements
                 if b.target == simple and b.length > 0]

    truncated = False
    k = 1
    while submodule:
        if k > max_deg:
            truncated = True
            break
        chosen = minimal_generators(tab, submodule, degrees)
        differential = []
        for _, m in chosen:
            entries = defaultdict(dict)
            for (g, b), c in m.items():
                entries[g][b] = c
            differential.append(dict(entries))
        images = [m for _, m in chosen]
        generators = [block[0] for block, _ in chosen]
        degrees = [block[1] for block, _ in chosen]
        terms.append(ResolutionTerm(tuple(generators), tuple(degrees), tuple(differential)))
        logger.debug('Resolution of S_%s: term %d has %d generators', simple, k, len(generators))

        submodule = _syzygy(tab, generators, degrees, images)
        k += 1

    minimal = all(tab.elements[b].length > 0
                  for term in terms for entry in term.differential
                  for element in entry.values() for b in element)
    return ProjectiveResolution(simple, tuple(terms), truncated, minimal)


def differentials_compose_to_zero(tab: AlgebraTable, res: ProjectiveResolution) -> bool:
    for upper, lower in zip(res.terms[2:], res.terms[1:]):
        for entry in upper.differential:
            total: Dict[int, Vector] = defaultdict(dict)
            for g, x in entry.items():
                for h, y in lower.differential[g].items():
                    add_scaled(total[h], tab.multiply(x, y))
            if any(total.values()):
                return False
    return True


def format_resolution(res: ProjectiveResolution, vertices: Optional[Sequence[str]] = None) -> str:
    """One line per term, e.g. ``1: P_2^2<1>``; ``<d>`` is the internal degree."""
    lines = ['resolution of S_%s' % res.simple]
    for k, term in enumerate(res.terms):
        counts = defaultdict(int)
        for vertex, degree in zip(term.generators, term.degrees):
            counts[(vertex, degree)] += 1
        order = list(vertices) if vertices else sorted({v for v, _ in counts})
        parts = []
        for (vertex, degree), count in sorted(counts.items(), key=lambda kv: (kv[0][1], order.index(kv[0][0]))):
            power = '^%d' % count if count > 1 else ''
            parts.append('P_%s%s<%d>' % (vertex, power, degree))
        lines.append('  %d: %s' % (k, ' + '.join(parts)))
    if res.truncated:
        lines.append('  ... (truncated)')
    return '\n'.join(lines)
