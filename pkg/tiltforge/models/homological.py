from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

from .table import Vector


@dataclass(frozen=True)
class LevelledStructure:
    order: Tuple[str, ...]
    s: Dict[str, int]
    n: int

    def level(self, vertex: str) -> int:
        return self.s[vertex]

    def block(self, level: int) -> Tuple[str, ...]:
        return tuple(v for v in self.order if self.s[v] == level)


@dataclass(frozen=True)
class LevelFailure:
    """Why a quiver is not levelled; witness holds the offending arrow ids."""
    reason: str
    witness: Tuple[str, ...] = ()


@dataclass(frozen=True)
class ResolutionTerm:
    """One term of a resolution: generators at vertices, with internal degrees.

    ``differential[g]`` maps generator g to its image in the previous term, as
    {previous generator: algebra element}.
    """
    generators: Tuple[str, ...]
    degrees: Tuple[int, ...]
    differential: Tuple[Dict[int, Vector], ...] = field(default=(), repr=False)

    def multiplicity(self, vertex: str) -> int:
        return self.generators.count(vertex)


@dataclass(frozen=True)
class ProjectiveResolution:
    simple: str
    terms: Tuple[ResolutionTerm, ...]
    truncated: bool = False
    minimal: bool = True

    @property
    def length(self) -> int:
        return len(self.terms) - 1

    def multiplicities(self, n: int, vertices) -> Tuple[int, ...]:
        if n >= len(self.terms):
            return tuple(0 for _ in vertices)
        return tuple(self.terms[n].multiplicity(v) for v in vertices)


@dataclass(frozen=True)
class ExtTable:
    """dims[(k, a, b)] = dim Ext^k(S_a, S_b); missing keys are zero."""
    dims: Dict[Tuple[int, str, str], int]
    bound: int
    truncated: bool = False

    def dim(self, k: int, a: str, b: str) -> int:
        return self.dims.get((k, a, b), 0)


@dataclass(frozen=True)
class KoszulVerdict:
    status: str
    bound: int
    witness: Optional[Tuple[int, str, str]] = None

    @property
    def is_koszul(self) -> bool:
        return self.status == 'koszul'
