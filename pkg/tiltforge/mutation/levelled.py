"""Levelled mutations, dual collections and the collections of an ordered algebra.

A levelled mutation moves a whole level past its neighbour. Objects inside a
level are mutually orthogonal, so each one is replaced by the cone against the
direct sum of the neighbouring level:
[R_B X] = Σ χ(X, F)[F] − [X] and [L_B X] = Σ χ(F, X)[F] − [X], F running over B.
"""

import logging
from fractions import Fraction
from typing import List, Sequence, Tuple

from ..errors import PreconditionException
from ..findim import cartan_matrix
from ..helpers import linalg
from ..models import AlgebraTable, EulerCollection, ExtTable, LevelledStructure
from .euler import make_collection, pairing

logger = logging.getLogger(__name__)


def _require_levels(c: EulerCollection) -> None:
    if c.levels is None:
        raise PreconditionException('Collection carries no levels')


def block_right_class(form, block: Sequence[Sequence[int]], x: Sequence[int]) -> List[int]:
    result = [-value for value in x]
    for f in block:
        factor = pairing(form, x, f)
        result = [r + factor * a for r, a in zip(result, f)]
    return result


def block_left_class(form, block: Sequence[Sequence[int]], x: Sequence[int]) -> List[int]:
    result = [-value for value in x]
    for f in block:
        factor = pairing(form, f, x)
        result = [r + factor * a for r, a in zip(result, f)]
    return result


def _rebuild(c: EulerCollection, entries: List[Tuple[str, Sequence[int], int]]) -> EulerCollection:
    return make_collection([label for label, _, _ in entries], [cls for _, cls, _ in entries],
                           c.form, [level for _, _, level in entries])


def levelled_mutate_right(c: EulerCollection, i: int) -> EulerCollection:
    """R_i: level i+1 drops to level i and level i, mutated through it, rises to level i+1."""
    _require_levels(c)
    if not 0 <= i < c.top_level:
        raise PreconditionException('Level %d cannot be right mutated (top level %d)' % (i, c.top_level))
    lower, upper = c.block(i), c.block(i + 1)
    through = [c.classes[k] for k in upper]
    entries = []
    for k in range(len(c)):
        level = c.levels[k]
        if level == i:
            continue
        if level == i + 1:
            entries.append((c.labels[k], c.classes[k], i))
            if k == upper[-1]:
                entries.extend(('R(%s)' % c.labels[j], block_right_class(c.form, through, c.classes[j]), i + 1)
                               for j in lower)
            continue
        entries.append((c.labels[k], c.classes[k], level))
    return _rebuild(c, entries)


def levelled_mutate_left(c: EulerCollection, i: int) -> EulerCollection:
    """L_i: level i, mutated through level i-1, drops to level i-1 and level i-1 rises to level i."""
    _require_levels(c)
    if not 0 < i <= c.top_level:
        raise PreconditionException('Level %d cannot be left mutated (top level %d)' % (i, c.top_level))
    lower, upper = c.block(i - 1), c.block(i)
    through = [c.classes[k] for k in lower]
    entries = []
    for k in range(len(c)):
        level = c.levels[k]
        if level == i:
            continue
        if level == i - 1:
            if k == lower[0]:
                entries.extend(('L(%s)' % c.labels[j], block_left_class(c.form, through, c.classes[j]), i - 1)
                               for j in upper)
            entries.append((c.labels[k], c.classes[k], i))
            continue
        entries.append((c.labels[k], c.classes[k], level))
    return _rebuild(c, entries)


def right_dual(c: EulerCollection) -> EulerCollection:
    """(E_n, R¹E_{n-1}, ..., RⁿE_0)."""
    _require_levels(c)
    n = c.top_level
    for k in range(n):
        for i in range(0, n - k):
            c = levelled_mutate_right(c, i)
    return c


def left_dual(c: EulerCollection) -> EulerCollection:
    """(LⁿE_n, ..., L¹E_1, E_0)."""
    _require_levels(c)
    n = c.top_level
    for k in range(n):
        for i in range(n, k, -1):
            c = levelled_mutate_left(c, i)
    return c


def dual_order(c: EulerCollection) -> Tuple[int, ...]:
    """Positions of c in the order their images appear in either dual collection."""
    _require_levels(c)
    return tuple(k for level in range(c.top_level, -1, -1) for k in c.block(level))


def projective_collection(tab: AlgebraTable, lv: LevelledStructure) -> EulerCollection:
    """The indecomposable projectives in level order; Hom dimensions are the Cartan matrix."""
    cartan = cartan_matrix(tab).reordered(lv.order).as_lists()
    size = len(lv.order)
    identity = [[int(i == j) for j in range(size)] for i in range(size)]
    return make_collection(['P_%s' % v for v in lv.order], identity, cartan,
                           [lv.level(v) for v in lv.order], cartan)


def shifted_simples_collection(tab: AlgebraTable, lv: LevelledStructure, table: ExtTable) -> EulerCollection:
    """The simples S_v[−s(v)] in reversed level order.

    Classes are expressed in the basis of projectives of ``projective_collection``;
    the Hom dimensions are read off the Ext table as Ext^{s(a)−s(b)}(S_a, S_b).

    Raises:
        ``PreconditionException``: if the Ext table is truncated.
    """
    if table.truncated:
        raise PreconditionException('Ext table is truncated at degree %d' % table.bound)
    cartan = cartan_matrix(tab).reordered(lv.order).as_lists()
    inverse = linalg.inverse(cartan)
    position = {v: k for k, v in enumerate(lv.order)}
    order = tuple(reversed(lv.order))

    classes = []
    for a in order:
        sign = -1 if lv.level(a) % 2 else 1
        column = [inverse[k][position[a]] for k in range(len(order))]
        if any(Fraction(value).denominator != 1 for value in column):
            raise PreconditionException('Cartan matrix is not unimodular')
        classes.append([sign * int(value) for value in column])

    gram = []
    for a in order:
        row = []
        for b in order:
            k = lv.level(a) - lv.level(b)
            row.append(1 if a == b else (table.dim(k, a, b) if k >= 0 else 0))
        gram.append(row)

    return make_collection(['S_%s[%d]' % (v, -lv.level(v)) for v in order], classes, cartan,
                           [lv.n - lv.level(v) for v in order], gram)
