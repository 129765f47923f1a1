from dataclasses import dataclass
from typing import Optional, Tuple


Matrix = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class EulerCollection:
    """An exceptional collection seen on the Euler lattice.

    ``classes`` are rows in a fixed basis, ``form`` is the Euler form in that
    basis and ``chi[i][j]`` is the pairing of objects i and j. ``gram`` holds
    Hom dimensions when they are known independently (strong collections).
    """
    labels: Tuple[str, ...]
    classes: Matrix
    chi: Matrix
    form: Matrix
    levels: Optional[Tuple[int, ...]] = None
    gram: Optional[Matrix] = None

    def __len__(self) -> int:
        return len(self.labels)

    @property
    def top_level(self) -> int:
        return max(self.levels) if self.levels else 0

    def block(self, level: int) -> Tuple[int, ...]:
        return tuple(k for k, s in enumerate(self.levels) if s == level)


@dataclass(frozen=True)
class CoxeterVerdict:
    """Outcome of comparing iterated right mutations with the inverse Serre image of left ones."""
    holds: bool
    sign: int
    failures: Tuple[str, ...] = ()
