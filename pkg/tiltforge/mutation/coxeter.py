import logging
from fractions import Fraction
from typing import List

from ..errors import CollectionNotFullException, PreconditionException
from ..helpers import linalg
from ..models import CoxeterVerdict, EulerCollection
from .levelled import block_left_class, block_right_class

logger = logging.getLogger(__name__)


def inverse_serre(form) -> List[List[Fraction]]:
    """The lattice action of the inverse Serre functor on row vectors: x ↦ x · formᵀ · form⁻¹."""
    return linalg.matmul(linalg.transpose(form), linalg.inverse(form))


def _apply(vector, matrix) -> List[Fraction]:
    return [sum(vector[k] * matrix[k][j] for k in range(len(vector))) for j in range(len(matrix[0]))]


def coxeter_check(c: EulerCollection) -> CoxeterVerdict:
    """Compares R^{n−s(i)}(E_i) with the inverse Serre image of L^{s(i)}(E_i), object by object.

    Mutating through whole levels, the two agree up to the global sign (−1)^n,
    n the top level; with singleton levels this is (−1)^m, m + 1 the length of c.

    Raises:
        ``PreconditionException``: if c has no levels.
        ``CollectionNotFullException``: if the classes do not form a basis.
    """
    if c.levels is None:
        raise PreconditionException('Collection carries no levels')
    size = len(c)
    if any(len(row) != size for row in c.classes) or len(c.form) != size:
        raise CollectionNotFullException('Collection of %d objects in a lattice of rank %d'
                                         % (size, len(c.form)))
    linalg.inverse(c.classes)

    n = c.top_level
    sign = -1 if n % 2 else 1
    serre = inverse_serre(c.form)
    blocks = [[c.classes[k] for k in c.block(level)] for level in range(n + 1)]

    failures = []
    for k in range(size):
        level = c.levels[k]
        right = list(c.classes[k])
        for upper in range(level + 1, n + 1):
            right = block_right_class(c.form, blocks[upper], right)
        left = list(c.classes[k])
        for lower in range(level - 1, -1, -1):
            left = block_left_class(c.form, blocks[lower], left)
        if right != [sign * value for value in _apply(left, serre)]:
            failures.append(c.labels[k])

    if failures:
        logger.info('Coxeter relation fails for %s', ', '.join(failures))
    return CoxeterVerdict(not failures, sign, tuple(failures))
