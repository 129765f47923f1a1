from typing import Dict, Iterable, List, Union

from ..tools.get_degree_spec import get_degree_spec
from ..errors.exceptions import InvalidArgumentException


def get_list_as_string(value):
    if value is None:
        return None

    if isinstance(value, str):
        return value

    elif isinstance(value, (list, tuple)):
        return ','.join(str(v) for v in value)

    else:
        raise InvalidArgumentException('Argument should be a list or string: ' + str(value))


def get_int_list(values: Union[str, Iterable[int]]) -> List[int]:
    if isinstance(values, str):
        values = [v for v in values.replace(' ', '').split(',') if v]

    elif not isinstance(values, (list, tuple)):
        raise InvalidArgumentException('Argument should be a list or comma separated string')

    try:
        return [int(v) for v in values]
    except (TypeError, ValueError) as error:
        raise InvalidArgumentException('Expected integers: ' + get_list_as_string(list(values))) from error


def get_vertex_list(values: Union[str, Iterable]) -> List[str]:
    if values is None:
        return []

    if isinstance(values, str):
        values = values.split(',')

    elif not isinstance(values, (list, tuple, set, frozenset)):
        raise InvalidArgumentException('Argument vertices should be a list or string')

    return [str(v).strip() for v in values if str(v).strip()]


def get_degree_specs(values: Iterable[str]) -> Dict[str, int]:
    degrees = {}
    for value in values or []:
        arrow_id, degree = get_degree_spec(value)
        degrees[arrow_id] = degree
    return degrees


def get_positive_int(value, name: str):
    if value is None:
        return None
    try:
        number = int(value)
    except (TypeError, ValueError) as error:
        raise InvalidArgumentException('%s should be an integer: %s' % (name, value)) from error
    if number < 1:
        raise InvalidArgumentException('%s should be positive: %s' % (name, value))
    return number
