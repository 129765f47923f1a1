"""Some useful tools."""

from typing import Dict, Tuple

from ..errors import InvalidArgumentException
import re


def get_degree_spec(text: str) -> Tuple[str, int]:
    """Returns (arrow id, degree) from `label@vertex=degree`. Raises InvalidArgumentException on fail."""
    spec = re.search(r'^\s*([^\s=]+@[^\s=]+)\s*=\s*([0-9]+)\s*$', text)
    if spec:
        return spec.group(1), int(spec.group(2))
    else:
        raise InvalidArgumentException('Degree spec not understood: ' + text)


def get_grading(text: str) -> Dict[str, int]:
    """Reads a grading file: one `label@vertex = degree` per line, `#` comments."""
    degrees = {}
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.split('#', 1)[0].strip()
        if not line:
            continue
        try:
            arrow_id, degree = get_degree_spec(line)
        except InvalidArgumentException as error:
            raise InvalidArgumentException('Grading line %d: %s' % (number, error.reason)) from error
        degrees[arrow_id] = degree
    return degrees
