import random

import pytest

from tiltforge import TiltForge, get_fixture
from tiltforge.findim import build_algebra
from tiltforge.homological import detect_levels
from tiltforge.models import Arrow, GradedPresentation, Quiver, Relation
from tiltforge.skewgroup import folded_quiver


def chain(length, relations=(), degrees=None):
    """0 -> 1 -> ... -> length, arrows named a, b, c, ...; relations are strings like 'a.b'."""
    names = 'abcdefghij'
    vertices = tuple(str(i) for i in range(length + 1))
    arrows = tuple(Arrow(names[i], str(i), str(i + 1), names[i]) for i in range(length))
    quiver = Quiver(vertices, arrows)
    built = tuple(Relation(((1, quiver.path(*text.split('.'))),)) for text in relations)
    return GradedPresentation(quiver, degrees or {}, built)


def kronecker():
    quiver = Quiver(('s', 't'), (Arrow('a', 's', 't', 'a'), Arrow('b', 's', 't', 'b')))
    return GradedPresentation(quiver)


def random_quadratic(rng: random.Random) -> GradedPresentation:
    size = rng.randint(1, 3)
    vertices = tuple(str(v) for v in range(size))
    arrows = tuple(Arrow('y%d' % k, rng.choice(vertices), rng.choice(vertices), 'y%d' % k)
                   for k in range(rng.randint(1, 5)))
    quiver = Quiver(vertices, arrows)
    relations = []
    for u in vertices:
        for w in vertices:
            paths = [quiver.path(a.id, b.id) for a in quiver.arrows if a.source == u
                     for b in quiver.arrows_from(a.target) if b.target == w]
            for _ in range(rng.randint(0, len(paths))):
                terms = [(rng.randint(-3, 3), path) for path in paths]
                terms = tuple((c, p) for c, p in terms if c)
                if terms:
                    relations.append(Relation(terms))
    return GradedPresentation(quiver, {}, tuple(relations))


@pytest.fixture
def forge():
    return TiltForge()


@pytest.fixture(scope='session')
def levelled_nabla():
    fixture = get_fixture('levelled')
    return folded_quiver(fixture.presentation(), fixture.ell)


@pytest.fixture(scope='session')
def levelled_table(levelled_nabla):
    return build_algebra(levelled_nabla)


@pytest.fixture(scope='session')
def levelled_levels(levelled_nabla):
    return detect_levels(levelled_nabla)


@pytest.fixture(scope='session')
def silting_nabla():
    fixture = get_fixture('silting')
    return folded_quiver(fixture.presentation(), fixture.ell)


@pytest.fixture
def rng():
    return random.Random(20240917)
