from dataclasses import dataclass
from typing import Tuple


@dataclass(frozen=True)
class Path:
    """A path read left to right; a trivial path has no arrows and source == target."""
    source: str
    target: str
    arrows: Tuple[str, ...] = ()

    @property
    def length(self) -> int:
        return len(self.arrows)

    @property
    def is_trivial(self) -> bool:
        return not self.arrows

    def __str__(self) -> str:
        if self.is_trivial:
            return '[%s]' % self.source
        return '.'.join(self.arrows)
