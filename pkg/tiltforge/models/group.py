from dataclasses import dataclass
from typing import Iterable, Tuple

from ..errors import InvalidArgumentException


@dataclass(frozen=True)
class CyclicGroupData:
    """The cyclic group 1/r(a1,...,ad) acting diagonally."""
    r: int
    weights: Tuple[int, ...]

    def __post_init__(self):
        if self.r < 1:
            raise InvalidArgumentException('Group order must be positive: ' + str(self.r))
        if not self.weights:
            raise InvalidArgumentException('At least one weight is required')
        object.__setattr__(self, 'weights', tuple(int(a) % self.r for a in self.weights))

    @classmethod
    def create(cls, r: int, weights: Iterable[int]) -> 'CyclicGroupData':
        return cls(int(r), tuple(weights))

    @property
    def d(self) -> int:
        return len(self.weights)

    def __str__(self) -> str:
        return '1/%d(%s)' % (self.r, ','.join(str(a) for a in self.weights))


@dataclass(frozen=True, order=True)
class FoldedVertex:
    i: int
    p: int

    def __str__(self) -> str:
        return '%d^%d' % (self.i, self.p)
