from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Tuple

from ..errors import PresentationException
from .path import Path
from .quiver import Quiver


@dataclass(frozen=True)
class Relation:
    terms: Tuple[Tuple[Fraction, Path], ...]

    def __post_init__(self):
        terms = tuple((Fraction(coefficient), path) for coefficient, path in self.terms)
        if not terms:
            raise PresentationException('A relation needs at least one term')
        object.__setattr__(self, 'terms', terms)

    @property
    def source(self) -> str:
        return self.terms[0][1].source

    @property
    def target(self) -> str:
        return self.terms[0][1].target

    @property
    def length(self) -> int:
        return self.terms[0][1].length

    def coefficients(self) -> Dict[Tuple[str, ...], Fraction]:
        """Arrow word to coefficient; repeated words are summed and zero sums dropped."""
        total: Dict[Tuple[str, ...], Fraction] = {}
        for coefficient, path in self.terms:
            total[path.arrows] = total.get(path.arrows, Fraction(0)) + coefficient
        return {word: c for word, c in total.items() if c}


@dataclass(frozen=True)
class GradedPresentation:
    quiver: Quiver
    degrees: Dict[str, int] = field(default_factory=dict)
    relations: Tuple[Relation, ...] = ()

    def __post_init__(self):
        degrees = {arrow.id: 1 for arrow in self.quiver.arrows}
        for arrow_id, degree in self.degrees.items():
            if arrow_id not in degrees:
                raise PresentationException('Degree given for unknown arrow: ' + arrow_id)
            if int(degree) < 0:
                raise PresentationException('Negative degree for arrow: ' + arrow_id)
            degrees[arrow_id] = int(degree)
        for relation in self.relations:
            for _, path in relation.terms:
                for arrow_id in path.arrows:
                    self.quiver.arrow(arrow_id)
        object.__setattr__(self, 'degrees', degrees)
        object.__setattr__(self, 'relations', tuple(self.relations))

    def degree(self, arrow_id: str) -> int:
        self.quiver.arrow(arrow_id)
        return self.degrees[arrow_id]

    def with_degrees(self, degrees: Dict[str, int]) -> 'GradedPresentation':
        merged = dict(self.degrees)
        merged.update(degrees)
        return GradedPresentation(self.quiver, merged, self.relations)

    @property
    def vertex_count(self) -> int:
        return len(self.quiver.vertices)

    @property
    def arrow_count(self) -> int:
        return len(self.quiver.arrows)
