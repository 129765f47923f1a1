"""Built-in groups, gradings and idempotents."""

from dataclasses import dataclass, field
from typing import Dict, Tuple

from .errors import InvalidArgumentException
from .models import CyclicGroupData, GradedPresentation
from .skewgroup import apply_grading, arrow_id, mckay_quiver


@dataclass(frozen=True)
class Fixture:
    name: str
    group: CyclicGroupData
    degrees: Dict[str, int] = field(default_factory=dict)
    e_vertices: Tuple[int, ...] = (0,)
    ell: int = 1
    description: str = ''

    def presentation(self) -> GradedPresentation:
        return apply_grading(mckay_quiver(self.group), self.degrees)


def _silting() -> Fixture:
    group = CyclicGroupData.create(5, (1, 2, 2))
    zero = {arrow_id('x1', 2), arrow_id('x2', 1), arrow_id('x3', 1), arrow_id('x2', 2), arrow_id('x3', 2)}
    degrees = {arrow_id('x%d' % j, i): 0 if arrow_id('x%d' % j, i) in zero else 1
               for i in range(5) for j in range(1, 4)}
    return Fixture('silting', group, degrees, (0,), 2, 'route A: 1/5(1,2,2), l = 2')


def _levelled() -> Fixture:
    group = CyclicGroupData.create(4, (1, 1, 3, 3))
    degrees = {arrow_id('x%d' % j, i): i % 2 for i in range(4) for j in range(1, 5)}
    return Fixture('levelled', group, degrees, (0,), 2, 'route B: 1/4(1,1,3,3), l = 2')


def _kronecker() -> Fixture:
    group = CyclicGroupData.create(1, (0, 0))
    return Fixture('kronecker', group, {}, (0,), 2, 'k[x,y]: the Beilinson algebra is the Kronecker quiver')


def _point() -> Fixture:
    group = CyclicGroupData.create(1, (0,))
    return Fixture('point', group, {}, (0,), 1, 'k[x]: l = 1, the Beilinson algebra is k')


FIXTURES = {
    'silting': _silting,
    'levelled': _levelled,
    'kronecker': _kronecker,
    'point': _point,
}


def get_fixture(name: str) -> Fixture:
    try:
        return FIXTURES[name]()
    except KeyError as error:
        raise InvalidArgumentException('Unknown fixture %s, expected one of %s'
                                       % (name, ', '.join(sorted(FIXTURES)))) from error
