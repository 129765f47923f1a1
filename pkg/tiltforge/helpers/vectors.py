"""Sparse vectors keyed by basis coordinates."""

from fractions import Fraction
from typing import Dict, Hashable, List, Sequence


def add_scaled(target: Dict, source: Dict, factor=1) -> Dict:
    """target += factor * source, in place, dropping zero entries."""
    factor = Fraction(factor)
    for key, value in source.items():
        total = target.get(key, Fraction(0)) + factor * value
        if total:
            target[key] = total
        else:
            target.pop(key, None)
    return target


def to_dense(vector: Dict, coordinates: Sequence[Hashable]) -> List[Fraction]:
    return [vector.get(key, Fraction(0)) for key in coordinates]


def to_sparse(row: Sequence, coordinates: Sequence[Hashable]) -> Dict:
    return {key: Fraction(value) for key, value in zip(coordinates, row) if value}
