"""Quivers, paths and presentation validation.

- arrows are kept in (source position, natural id) order
- malformed quivers raise PresentationException
- paths compose only end to start
- validation names the first broken relation
"""

import random

import pytest

from tiltforge.errors import CompositionException, LookupException, PresentationException
from tiltforge.models import Arrow, GradedPresentation, Path, Quiver, Relation, dual_arrow_id, natural_key
from tiltforge.presentation import compose_paths, path_degree, validate_presentation

from .conftest import chain, kronecker


def test_natural_key_orders_numbers_numerically():
    assert sorted(['x10', 'x2', 'x1'], key=natural_key) == ['x1', 'x2', 'x10']


def test_arrows_sorted_by_source_then_id():
    quiver = Quiver(('0', '1'), (Arrow('x10', '1', '0', 'x10'), Arrow('x2', '0', '1', 'x2'),
                                 Arrow('x1', '1', '0', 'x1')))
    assert [a.id for a in quiver.arrows] == ['x2', 'x1', 'x10']


def test_duplicate_vertex_rejected():
    with pytest.raises(PresentationException):
        Quiver(('0', '0'), ())


def test_duplicate_arrow_rejected():
    with pytest.raises(PresentationException):
        Quiver(('0', '1'), (Arrow('a', '0', '1', 'a'), Arrow('a', '1', '0', 'a')))


def test_undeclared_endpoint_rejected():
    with pytest.raises(PresentationException):
        Quiver(('0',), (Arrow('a', '0', '1', 'a'),))


def test_unknown_lookups():
    quiver = kronecker().quiver
    with pytest.raises(LookupException):
        quiver.arrow('c')
    with pytest.raises(LookupException):
        quiver.index('u')


def test_path_requires_composable_arrows():
    quiver = chain(2).quiver
    assert quiver.path('a', 'b') == Path('0', '2', ('a', 'b'))
    with pytest.raises(CompositionException):
        quiver.path('b', 'a')
    with pytest.raises(CompositionException):
        quiver.path()


def test_compose_paths():
    quiver = chain(3).quiver
    assert compose_paths(quiver.path('a'), quiver.path('b', 'c')) == quiver.path('a', 'b', 'c')
    assert compose_paths(quiver.trivial('0'), quiver.path('a')) == quiver.path('a')
    with pytest.raises(CompositionException):
        compose_paths(quiver.path('a'), quiver.path('c'))


def test_path_str():
    quiver = chain(2).quiver
    assert str(quiver.path('a', 'b')) == 'a.b'
    assert str(quiver.trivial('1')) == '[1]'


def test_opposite_reverses_arrows_and_toggles_ids():
    opposite = kronecker().quiver.opposite()
    assert [(a.id, a.source, a.target) for a in opposite.arrows] == [('a*', 't', 's'), ('b*', 't', 's')]
    assert dual_arrow_id('a*') == 'a'
    assert opposite.opposite() == kronecker().quiver


def test_degrees_default_to_one():
    pres = chain(2, degrees={'a': 0})
    assert pres.degrees == {'a': 0, 'b': 1}
    assert path_degree(pres, pres.quiver.path('a', 'b')) == 1


def test_degree_for_unknown_arrow_rejected():
    with pytest.raises(PresentationException):
        chain(1, degrees={'z': 1})


def test_negative_degree_rejected():
    with pytest.raises(PresentationException):
        chain(1, degrees={'a': -1})


def test_valid_presentation():
    report = validate_presentation(chain(2, ['a.b']))
    assert report.valid
    assert report.first_problem is None


def test_zero_relation_reported():
    pres = chain(2)
    zero = Relation(((0, pres.quiver.path('a', 'b')),))
    report = validate_presentation(GradedPresentation(pres.quiver, {}, (zero,)))
    assert not report.valid
    assert report.first_problem == 'relation 0: all coefficients are zero'


def test_cancelling_terms_reported():
    pres = chain(2)
    path = pres.quiver.path('a', 'b')
    report = validate_presentation(GradedPresentation(pres.quiver, {}, (Relation(((2, path), (-2, path))),)))
    assert report.first_problem == 'relation 0: repeated terms cancel to zero'


def test_non_parallel_relation_reported():
    quiver = Quiver(('0', '1', '2'), (Arrow('a', '0', '1', 'a'), Arrow('b', '0', '2', 'b')))
    relation = Relation(((1, quiver.path('a')), (-1, quiver.path('b'))))
    report = validate_presentation(GradedPresentation(quiver, {}, (relation,)))
    assert report.first_problem == 'relation 0, term 1: non-parallel paths'


def test_length_and_degree_homogeneity():
    quiver = Quiver(('0', '1', '2'), (Arrow('a', '0', '1', 'a'), Arrow('b', '1', '2', 'b'),
                                      Arrow('c', '0', '2', 'c')))
    relation = Relation(((1, quiver.path('a', 'b')), (-1, quiver.path('c'))))

    report = validate_presentation(GradedPresentation(quiver, {'c': 2}, (relation,)))
    assert report.first_problem == 'relation 0, term 1: inhomogeneous relation (path length 1 vs 2)'
    assert validate_presentation(GradedPresentation(quiver, {'c': 2}, (relation,)), require_length=False).valid

    report = validate_presentation(GradedPresentation(quiver, {}, (relation,)), require_length=False)
    assert report.first_problem == 'relation 0, term 1: inhomogeneous relation (degree 1 vs 2)'


def random_walk(rng, quiver, start, steps):
    ids, vertex = [], start
    for _ in range(steps):
        out = quiver.arrows_from(vertex)
        if not out:
            break
        arrow = rng.choice(out)
        ids.append(arrow.id)
        vertex = arrow.target
    return quiver.path(*ids) if ids else quiver.trivial(start)


@pytest.mark.parametrize('seed', range(100))
def test_length_and_degree_add_under_composition(seed):
    rng = random.Random(seed)
    vertices = tuple(str(v) for v in range(rng.randint(1, 4)))
    arrows = tuple(Arrow('a%d' % k, rng.choice(vertices), rng.choice(vertices), 'a%d' % k)
                   for k in range(rng.randint(1, 7)))
    quiver = Quiver(vertices, arrows)
    pres = GradedPresentation(quiver, {arrow.id: rng.randint(0, 4) for arrow in arrows})

    p = random_walk(rng, quiver, rng.choice(vertices), rng.randint(0, 4))
    q = random_walk(rng, quiver, p.target, rng.randint(0, 4))
    pq = compose_paths(p, q)
    assert (pq.source, pq.target) == (p.source, q.target)
    assert pq.length == p.length + q.length
    assert path_degree(pres, pq) == path_degree(pres, p) + path_degree(pres, q)
