"""Powers of the radical J, spanned by the basis elements of positive length."""

from collections import defaultdict
from fractions import Fraction
from typing import Dict, List, Tuple

from ..helpers import linalg, to_dense, to_sparse
from ..models import AlgebraTable, Vector

Slices = Dict[Tuple[str, str], List[Vector]]


def _radical(tab: AlgebraTable) -> Slices:
    slices = defaultdict(list)
    for element in tab.elements:
        if element.length > 0:
            slices[(element.source, element.target)].append({element.index: Fraction(1)})
    return dict(slices)


def _next_power(tab: AlgebraTable, power: Slices, radical: Slices) -> Slices:
    products = defaultdict(list)
    for (s, u), left in power.items():
        for (v, t), right in radical.items():
            if u != v:
                continue
            for x in left:
                for y in right:
                    z = tab.multiply(x, y)
                    if z:
                        products[(s, t)].append(z)

    result = {}
    for key, vectors in products.items():
        coordinates = [b.index for b in tab.between(*key)]
        reduced, _ = linalg.rref([to_dense(z, coordinates) for z in vectors], len(coordinates))
        if reduced:
            result[key] = [to_sparse(row, coordinates) for row in reduced]
    return result


def radical_power_slices(tab: AlgebraTable, k: int) -> Slices:
    """Bases of e_s J^k e_t keyed by (s, t); blocks that vanish are left out.

    J^0 is the whole algebra.
    """
    if k == 0:
        return {(s, t): [{b.index: Fraction(1)} for b in tab.between(s, t)]
                for s in tab.vertices for t in tab.vertices if tab.between(s, t)}
    radical = _radical(tab)
    power = radical
    for _ in range(k - 1):
        if not power:
            break
        power = _next_power(tab, power, radical)
    return power


def radical_dimensions(tab: AlgebraTable) -> List[int]:
    """dim J^k for k = 1, 2, ... up to the first vanishing power (excluded)."""
    radical = _radical(tab)
    power = radical
    dims = []
    while power:
        dims.append(sum(len(basis) for basis in power.values()))
        power = _next_power(tab, power, radical)
    return dims


def nilpotency_index(tab: AlgebraTable) -> int:
    """Smallest k with J^k = 0."""
    return len(radical_dimensions(tab)) + 1
