import re
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Tuple

from ..errors import PresentationException, LookupException, CompositionException
from .path import Path


def natural_key(text: str) -> Tuple:
    """Sort key that orders embedded integers numerically (x2 before x10)."""
    return tuple(int(part) if part.isdigit() else part for part in re.split(r'(\d+)', text))


@dataclass(frozen=True)
class Arrow:
    id: str
    source: str
    target: str
    label: str


@dataclass(frozen=True)
class Quiver:
    vertices: Tuple[str, ...]
    arrows: Tuple[Arrow, ...]

    def __post_init__(self):
        vertices = tuple(str(v) for v in self.vertices)
        if len(set(vertices)) != len(vertices):
            raise PresentationException('Vertex ids must be unique')

        known = set(vertices)
        ids = set()
        for arrow in self.arrows:
            if arrow.id in ids:
                raise PresentationException('Arrow id is duplicated: ' + arrow.id)
            ids.add(arrow.id)
            if arrow.source not in known or arrow.target not in known:
                raise PresentationException('Arrow %s has an undeclared endpoint' % arrow.id)

        position = {v: k for k, v in enumerate(vertices)}
        arrows = tuple(sorted(self.arrows, key=lambda a: (position[a.source], natural_key(a.id))))
        object.__setattr__(self, 'vertices', vertices)
        object.__setattr__(self, 'arrows', arrows)

    @cached_property
    def _arrow_map(self) -> Dict[str, Arrow]:
        return {arrow.id: arrow for arrow in self.arrows}

    @cached_property
    def _vertex_index(self) -> Dict[str, int]:
        return {v: k for k, v in enumerate(self.vertices)}

    @cached_property
    def _arrow_index(self) -> Dict[str, int]:
        return {arrow.id: k for k, arrow in enumerate(self.arrows)}

    def arrow(self, arrow_id: str) -> Arrow:
        try:
            return self._arrow_map[arrow_id]
        except KeyError as error:
            raise LookupException('Unknown arrow id: ' + str(arrow_id)) from error

    def has_vertex(self, vertex: str) -> bool:
        return vertex in self._vertex_index

    def index(self, vertex: str) -> int:
        try:
            return self._vertex_index[vertex]
        except KeyError as error:
            raise LookupException('Unknown vertex id: ' + str(vertex)) from error

    def arrows_from(self, vertex: str) -> List[Arrow]:
        return [arrow for arrow in self.arrows if arrow.source == vertex]

    def arrows_between(self, source: str, target: str) -> List[Arrow]:
        return [arrow for arrow in self.arrows if arrow.source == source and arrow.target == target]

    def trivial(self, vertex: str) -> Path:
        self.index(vertex)
        return Path(vertex, vertex)

    def path(self, *arrow_ids: str) -> Path:
        """Builds the path through the given arrows. Raises CompositionException on a gap."""
        if not arrow_ids:
            raise CompositionException('A path needs at least one arrow, use trivial() instead')
        arrows = [self.arrow(arrow_id) for arrow_id in arrow_ids]
        for first, second in zip(arrows, arrows[1:]):
            if first.target != second.source:
                raise CompositionException('Arrows %s and %s are not composable' % (first.id, second.id))
        return Path(arrows[0].source, arrows[-1].target, tuple(arrow_ids))

    def path_key(self, path: Path) -> Tuple[int, ...]:
        """Lexicographic key of a path under the arrow order."""
        return tuple(self._arrow_index[arrow_id] for arrow_id in path.arrows)

    def opposite(self) -> 'Quiver':
        return Quiver(self.vertices, tuple(
            Arrow(dual_arrow_id(a.id), a.target, a.source, a.label) for a in self.arrows))


def dual_arrow_id(arrow_id: str) -> str:
    """x becomes x*, and x* becomes x again."""
    return arrow_id[:-1] if arrow_id.endswith('*') else arrow_id + '*'
