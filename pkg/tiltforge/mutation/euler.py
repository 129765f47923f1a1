"""Exceptional collections on the Euler lattice and single-object mutations."""

from typing import Iterable, List, Optional, Sequence

from ..errors import PreconditionException
from ..models import EulerCollection, Matrix


def pairing(form: Sequence[Sequence[int]], x: Sequence[int], y: Sequence[int]) -> int:
    """The Euler form on two classes, x · form · yᵀ."""
    return sum(x[i] * form[i][j] * y[j] for i in range(len(x)) if x[i] for j in range(len(y)) if y[j])


def _matrix(rows) -> Matrix:
    return tuple(tuple(int(value) for value in row) for row in rows)


def make_collection(labels: Sequence[str], classes, form, levels: Optional[Sequence[int]] = None,
                    gram=None) -> EulerCollection:
    classes = _matrix(classes)
    form = _matrix(form)
    if len(labels) != len(classes):
        raise PreconditionException('Expected %d classes, got %d' % (len(labels), len(classes)))
    if levels is not None and len(levels) != len(labels):
        raise PreconditionException('Expected %d levels, got %d' % (len(labels), len(levels)))
    chi = tuple(tuple(pairing(form, x, y) for y in classes) for x in classes)
    return EulerCollection(tuple(labels), classes, chi, form,
                           tuple(levels) if levels is not None else None,
                           _matrix(gram) if gram is not None else None)


def is_exceptional(c: EulerCollection) -> bool:
    size = len(c)
    return all(c.chi[i][i] == 1 for i in range(size)) and \
        all(c.chi[j][i] == 0 for i in range(size) for j in range(i + 1, size))


def is_levelled(c: EulerCollection) -> bool:
    """Exceptional, levels monotonic and onto 0..n, and objects within a level orthogonal."""
    if c.levels is None or not is_exceptional(c):
        return False
    levels = list(c.levels)
    if levels != sorted(levels) or set(levels) != set(range(c.top_level + 1)):
        return False
    return all(c.chi[i][j] == 0 for i in range(len(c)) for j in range(len(c))
               if i != j and levels[i] == levels[j])


def left_class(form, e: Sequence[int], x: Sequence[int]) -> List[int]:
    """[L_E X] = χ(E, X)[E] − [X]."""
    factor = pairing(form, e, x)
    return [factor * a - b for a, b in zip(e, x)]


def right_class(form, e: Sequence[int], x: Sequence[int]) -> List[int]:
    """[R_E X] = χ(X, E)[E] − [X]."""
    factor = pairing(form, x, e)
    return [factor * a - b for a, b in zip(e, x)]


def _replace(c: EulerCollection, position: int, labels, classes) -> EulerCollection:
    all_labels = list(c.labels)
    all_classes = [list(row) for row in c.classes]
    all_labels[position:position + 2] = labels
    all_classes[position:position + 2] = classes
    return make_collection(all_labels, all_classes, c.form)


def left_mutate(c: EulerCollection, i: int) -> EulerCollection:
    """(E_{i-1}, E_i) becomes (L_{E_{i-1}} E_i, E_{i-1}); levels are dropped.

    Raises:
        ``PreconditionException``: unless 0 < i < len(c).
    """
    if not 0 < i < len(c):
        raise PreconditionException('Left mutation index %d out of range 1..%d' % (i, len(c) - 1))
    e, x = c.classes[i - 1], c.classes[i]
    label = 'L(%s,%s)' % (c.labels[i - 1], c.labels[i])
    return _replace(c, i - 1, [label, c.labels[i - 1]], [left_class(c.form, e, x), list(e)])


def right_mutate(c: EulerCollection, i: int) -> EulerCollection:
    """(E_i, E_{i+1}) becomes (E_{i+1}, R_{E_{i+1}} E_i); levels are dropped.

    Raises:
        ``PreconditionException``: unless 0 <= i < len(c) - 1.
    """
    if not 0 <= i < len(c) - 1:
        raise PreconditionException('Right mutation index %d out of range 0..%d' % (i, len(c) - 2))
    x, e = c.classes[i], c.classes[i + 1]
    label = 'R(%s,%s)' % (c.labels[i + 1], c.labels[i])
    return _replace(c, i, [c.labels[i + 1], label], [list(e), right_class(c.form, e, x)])


def restrict(c: EulerCollection, removed: Iterable[int]) -> EulerCollection:
    """The sub-collection without the given positions; levels and Hom dimensions are kept where present."""
    removed = set(removed)
    keep = [k for k in range(len(c)) if k not in removed]
    gram = None
    if c.gram is not None:
        gram = [[c.gram[i][j] for j in keep] for i in keep]
    return make_collection([c.labels[k] for k in keep], [c.classes[k] for k in keep], c.form,
                           [c.levels[k] for k in keep] if c.levels is not None else None, gram)


def collection_to_dict(c: EulerCollection) -> dict:
    result = {
        'labels': list(c.labels),
        'classes': [list(row) for row in c.classes],
        'chi': [list(row) for row in c.chi],
        'levels': list(c.levels) if c.levels is not None else None,
    }
    if c.gram is not None:
        result['gram'] = [list(row) for row in c.gram]
    return result
