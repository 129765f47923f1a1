from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Tuple

from .path import Path
from .presentation import GradedPresentation


Vector = Dict[int, Fraction]


@dataclass(frozen=True)
class BasisElement:
    index: int
    path: Path
    length: int
    degree: int

    @property
    def source(self) -> str:
        return self.path.source

    @property
    def target(self) -> str:
        return self.path.target


@dataclass(frozen=True)
class AlgebraTable:
    """Basis and multiplication table of a finite-dimensional quotient of a path algebra.

    Basis elements are indexed globally; ``mult[(i, j)]`` is stored for every
    composable pair (target of i equals source of j) and omitted products are zero.
    ``steps`` holds, per weight n, the normal form of every basis element extended
    by an arrow to total weight n. The weight is the path length, or the degree
    when ``graded_by`` is 'degree'.
    """
    presentation: GradedPresentation
    elements: Tuple[BasisElement, ...]
    mult: Dict[Tuple[int, int], Vector] = field(repr=False)
    units: Dict[str, int] = field(repr=False)
    steps: Tuple[Dict[Tuple[int, str], Vector], ...] = field(repr=False, default=())
    complete: bool = True
    graded_by: str = 'length'

    @property
    def vertices(self) -> Tuple[str, ...]:
        return self.presentation.quiver.vertices

    def element(self, index: int) -> BasisElement:
        return self.elements[index]

    def between(self, source: str, target: str) -> List[BasisElement]:
        return [b for b in self.elements if b.source == source and b.target == target]

    def of_length(self, length: int) -> List[BasisElement]:
        return [b for b in self.elements if b.length == length]

    def of_weight(self, weight: int) -> List[BasisElement]:
        return [b for b in self.elements if self.weight(b.index) == weight]

    @property
    def top_length(self) -> int:
        return max((b.length for b in self.elements), default=0)

    def product(self, i: int, j: int) -> Vector:
        return self.mult.get((i, j), {})

    def multiply(self, x: Vector, y: Vector) -> Vector:
        result: Vector = {}
        for i, a in x.items():
            for j, b in y.items():
                for k, c in self.mult.get((i, j), {}).items():
                    value = result.get(k, Fraction(0)) + a * b * c
                    if value:
                        result[k] = value
                    else:
                        result.pop(k, None)
        return result

    def weight(self, index: int) -> int:
        element = self.elements[index]
        return element.degree if self.graded_by == 'degree' else element.length

    def arrow_weight(self, arrow_id: str) -> int:
        return self.presentation.degree(arrow_id) if self.graded_by == 'degree' else 1

    def extend(self, x: Vector, arrow_id: str) -> Vector:
        """Right multiplication of x by an arrow of the underlying quiver."""
        result: Vector = {}
        step = self.arrow_weight(arrow_id)
        for i, a in x.items():
            weight = self.weight(i) + step
            if weight >= len(self.steps):
                continue
            for k, c in self.steps[weight].get((i, arrow_id), {}).items():
                value = result.get(k, Fraction(0)) + a * c
                if value:
                    result[k] = value
                else:
                    result.pop(k, None)
        return result

    def reduce(self, path: Path) -> Vector:
        """Normal form of a path in the basis."""
        vector: Vector = {self.units[path.source]: Fraction(1)}
        for arrow_id in path.arrows:
            vector = self.extend(vector, arrow_id)
            if not vector:
                break
        return vector

    def __len__(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class CartanMatrix:
    vertices: Tuple[str, ...]
    entries: Tuple[Tuple[int, ...], ...]

    def entry(self, source: str, target: str) -> int:
        return self.entries[self.vertices.index(source)][self.vertices.index(target)]

    def reordered(self, order) -> 'CartanMatrix':
        order = tuple(order)
        return CartanMatrix(order, tuple(
            tuple(self.entry(a, b) for b in order) for a in order))

    def as_lists(self) -> List[List[int]]:
        return [list(row) for row in self.entries]

