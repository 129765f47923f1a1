import logging
from collections import deque
from typing import Dict, Union

import networkx as nx

from ..models import GradedPresentation, LevelFailure, LevelledStructure

logger = logging.getLogger(__name__)


def quiver_graph(pres: GradedPresentation) -> nx.MultiDiGraph:
    graph = nx.MultiDiGraph()
    graph.add_nodes_from(pres.quiver.vertices)
    for arrow in pres.quiver.arrows:
        graph.add_edge(arrow.source, arrow.target, key=arrow.id)
    return graph


def detect_levels(pres: GradedPresentation) -> Union[LevelledStructure, LevelFailure]:
    """Finds s with s(target) = s(source) + 1 on every arrow, or a witness that none exists.

    Each weakly connected component is shifted so that its lowest level is 0.
    """
    quiver = pres.quiver
    if not quiver.vertices:
        return LevelFailure('quiver has no vertices')

    graph = quiver_graph(pres)
    if not nx.is_directed_acyclic_graph(graph):
        cycle = nx.find_cycle(graph)
        return LevelFailure('quiver has an oriented cycle', tuple(edge[2] for edge in cycle))

    s: Dict[str, int] = {}
    components = sorted(nx.weakly_connected_components(graph),
                        key=lambda component: min(quiver.index(v) for v in component))
    for component in components:
        start = min(component, key=quiver.index)
        potential = {start: 0}
        queue = deque([start])
        while queue:
            vertex = queue.popleft()
            neighbours = [(arrow, arrow.target, potential[vertex] + 1)
                          for arrow in quiver.arrows if arrow.source == vertex]
            neighbours += [(arrow, arrow.source, potential[vertex] - 1)
                           for arrow in quiver.arrows if arrow.target == vertex]
            for arrow, other, value in neighbours:
                if other not in potential:
                    potential[other] = value
                    queue.append(other)
                elif potential[other] != value:
                    logger.debug('Arrow %s breaks the level equations', arrow.id)
                    return LevelFailure('arrow %s does not raise the level by one' % arrow.id, (arrow.id,))
        lowest = min(potential.values())
        s.update({v: value - lowest for v, value in potential.items()})

    n = max(s.values())
    if set(s.values()) != set(range(n + 1)):
        return LevelFailure('level function is not surjective onto 0..%d' % n)
    order = tuple(sorted(quiver.vertices, key=lambda v: (s[v], quiver.index(v))))
    return LevelledStructure(order, s, n)


def is_levelled(result) -> bool:
    return isinstance(result, LevelledStructure)
