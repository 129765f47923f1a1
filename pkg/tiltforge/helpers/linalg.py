"""Exact linear algebra over the rationals, on top of sympy's DomainMatrix."""

from fractions import Fraction
from typing import List, Sequence, Tuple

from sympy import QQ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError

from ..errors import CollectionNotFullException


Rows = List[List[Fraction]]


def _domain_matrix(rows: Sequence[Sequence], ncols: int) -> DomainMatrix:
    entries = []
    for row in rows:
        converted = []
        for value in row:
            value = Fraction(value)
            converted.append(QQ(value.numerator, value.denominator))
        entries.append(converted)
    return DomainMatrix(entries, (len(entries), ncols), QQ)


def _fraction(value) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))


def rref(rows: Sequence[Sequence], ncols: int) -> Tuple[Rows, Tuple[int, ...]]:
    """Reduced row echelon form; returns only the nonzero rows and the pivot columns."""
    if not rows or ncols == 0:
        return [], ()
    reduced, pivots = _domain_matrix(rows, ncols).rref()
    result = [[_fraction(x) for x in row] for row in reduced.to_list()[:len(pivots)]]
    return result, tuple(pivots)


def rank(rows: Sequence[Sequence], ncols: int) -> int:
    return len(rref(rows, ncols)[1])


def kernel(rows: Sequence[Sequence], ncols: int) -> Rows:
    """Basis of {x : rows · x = 0}, one vector per free column in increasing order."""
    reduced, pivots = rref(rows, ncols)
    basis = []
    for free in range(ncols):
        if free in pivots:
            continue
        vector = [Fraction(0)] * ncols
        vector[free] = Fraction(1)
        for row, pivot in zip(reduced, pivots):
            vector[pivot] = -row[free]
        basis.append(vector)
    return basis


def annihilator(rows: Sequence[Sequence], ncols: int) -> Rows:
    """Reduced echelon basis of the annihilator of the row space under the standard pairing."""
    return rref(kernel(rows, ncols), ncols)[0]


def reduce_against(vector: Sequence, reduced: Rows, pivots: Sequence[int]) -> List[Fraction]:
    """Remainder of a vector after elimination by an rref basis."""
    result = [Fraction(x) for x in vector]
    for row, pivot in zip(reduced, pivots):
        factor = result[pivot]
        if factor:
            result = [x - factor * y for x, y in zip(result, row)]
    return result


def extend_basis(span: Rows, candidates: Sequence[Sequence], ncols: int) -> List[int]:
    """Indices of candidates that, taken greedily in order, extend span to a larger space."""
    reduced, pivots = rref(span, ncols)
    chosen = []
    for k, candidate in enumerate(candidates):
        remainder = reduce_against(candidate, reduced, pivots)
        if any(remainder):
            chosen.append(k)
            reduced, pivots = rref(reduced + [remainder], ncols)
    return chosen


def inverse(matrix: Sequence[Sequence]) -> Rows:
    size = len(matrix)
    if size == 0:
        return []
    try:
        inverted = _domain_matrix(matrix, size).inv()
    except DMNonInvertibleMatrixError as error:
        raise CollectionNotFullException('Class matrix is not invertible') from error
    return [[_fraction(x) for x in row] for row in inverted.to_list()]


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> Rows:
    inner = len(b)
    cols = len(b[0]) if b else 0
    return [[sum((Fraction(row[k]) * Fraction(b[k][j]) for k in range(inner)), Fraction(0))
             for j in range(cols)] for row in a]


def transpose(matrix: Sequence[Sequence]) -> Rows:
    return [list(column) for column in zip(*matrix)] if matrix else []
