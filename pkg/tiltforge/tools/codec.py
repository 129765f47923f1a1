"""Canonical text format, DOT export and JSON form of presentations.

Text format, one item per line, ``#`` starts a comment::

    vertex 0
    arrow x1@0: 0 -> 1 @1
    arrow c: 1 -> 0 @2 x3x4
    relation +1 x1@0.x2@1 -1 x2@0.x1@2

The label follows the degree only when it differs from the arrow id; it is
written in double quotes, with backslash escapes, when it is empty or holds
spaces, quotes, ``#`` or backslashes. Relation
terms are signed coefficients followed by dot-separated arrow ids; ``[v]`` is
the trivial path at v.
"""

import re
from fractions import Fraction
from typing import Dict, List, Tuple

from ..errors import ParseException, TiltForgeException
from ..models import Arrow, GradedPresentation, Path, Quiver, Relation

_TOKEN = re.compile(r'\S+')
_ARROW = re.compile(r'^arrow\s+([^\s.:\[\]]+):\s+(\S+)\s+->\s+(\S+)\s+@([0-9]+)'
                    r'(?:\s+("(?:[^"\\]|\\.)*"|\S+))?\s*$')
_BARE_LABEL = re.compile(r'[^\s"#\\]+')
_ESCAPE = re.compile(r'\\(.)')


def format_coefficient(value: Fraction) -> str:
    return ('+' if value > 0 else '') + str(value)


def format_relation(relation: Relation) -> str:
    return ' '.join('%s %s' % (format_coefficient(coefficient), path) for coefficient, path in relation.terms)


def format_label(label: str) -> str:
    """The label as written in an arrow line; quoted when it is empty or has spaces, quotes, # or backslashes."""
    if _BARE_LABEL.fullmatch(label):
        return label
    return '"%s"' % label.replace('\\', '\\\\').replace('"', '\\"')


def _read_label(text: str) -> str:
    if len(text) >= 2 and text[0] == text[-1] == '"':
        return _ESCAPE.sub(r'\1', text[1:-1])
    return text


def serialize(pres: GradedPresentation) -> str:
    lines = ['vertex %s' % v for v in pres.quiver.vertices]
    for arrow in pres.quiver.arrows:
        line = 'arrow %s: %s -> %s @%d' % (arrow.id, arrow.source, arrow.target, pres.degrees[arrow.id])
        if arrow.label != arrow.id:
            line += ' ' + format_label(arrow.label)
        lines.append(line)
    lines.extend('relation ' + format_relation(relation) for relation in pres.relations)
    return ''.join(line + '\n' for line in lines)


def _strip_comment(raw: str) -> str:
    """Cuts the line at the first ``#`` outside a quoted label."""
    quoted = escaped = False
    for k, char in enumerate(raw):
        if escaped:
            escaped = False
        elif quoted and char == '\\':
            escaped = True
        elif char == '"':
            quoted = not quoted
        elif char == '#' and not quoted:
            return raw[:k].rstrip()
    return raw.rstrip()


def _tokens(text: str) -> List[Tuple[str, int]]:
    return [(match.group(0), match.start() + 1) for match in _TOKEN.finditer(text)]


def parse(text: str) -> GradedPresentation:
    """Parses the canonical text format.

    Raises:
        ``ParseException``: with the line and column of the first problem.
    """
    vertices: Dict[str, int] = {}
    arrows: List[Tuple[Arrow, int, Dict[str, int]]] = []
    degrees: Dict[str, int] = {}
    pending: List[Tuple[int, List[Tuple[str, int]]]] = []

    for number, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line.strip():
            continue
        tokens = _tokens(line)
        keyword, column = tokens[0]

        if keyword == 'vertex':
            if len(tokens) != 2:
                raise ParseException('vertex line takes exactly one id', number, column)
            vertex, v_column = tokens[1]
            if vertex in vertices:
                raise ParseException('vertex %s is already declared on line %d' % (vertex, vertices[vertex]),
                                     number, v_column)
            vertices[vertex] = number
        elif keyword == 'arrow':
            indent = len(line) - len(line.lstrip())
            match = _ARROW.match(line.strip())
            if not match:
                raise ParseException('expected "arrow <id>: <source> -> <target> @<degree> [<label>]"',
                                     number, column)
            arrow_id, source, target, degree, label = match.groups()
            columns = {name: indent + match.start(group) + 1
                       for name, group in (('id', 1), ('source', 2), ('target', 3))}
            if arrow_id in degrees:
                raise ParseException('arrow id %s is duplicated' % arrow_id, number, columns['id'])
            arrows.append((Arrow(arrow_id, source, target, _read_label(label) if label else arrow_id),
                           number, columns))
            degrees[arrow_id] = int(degree)
        elif keyword == 'relation':
            pending.append((number, tokens[1:]))
        else:
            raise ParseException('unknown keyword: ' + keyword, number, column)

    for arrow, number, columns in arrows:
        for end in ('source', 'target'):
            if getattr(arrow, end) not in vertices:
                raise ParseException('arrow %s has the undeclared %s %s' % (arrow.id, end, getattr(arrow, end)),
                                     number, columns[end])

    quiver = Quiver(tuple(vertices), tuple(arrow for arrow, _, _ in arrows))
    relations = [_parse_relation(quiver, number, tokens) for number, tokens in pending]
    return GradedPresentation(quiver, degrees, tuple(relations))


def _parse_relation(quiver: Quiver, number: int, tokens: List[Tuple[str, int]]) -> Relation:
    if not tokens or len(tokens) % 2:
        column = tokens[-1][1] if tokens else 1
        raise ParseException('relation needs coefficient/path pairs', number, column)

    terms = []
    for (coefficient, c_column), (path, p_column) in zip(tokens[::2], tokens[1::2]):
        try:
            value = Fraction(coefficient)
        except (ValueError, ZeroDivisionError) as error:
            raise ParseException('bad coefficient: ' + coefficient, number, c_column) from error
        try:
            if path.startswith('[') and path.endswith(']'):
                term = quiver.trivial(path[1:-1])
            else:
                term = quiver.path(*path.split('.'))
        except TiltForgeException as error:
            raise ParseException(error.reason, number, p_column) from error
        terms.append((value, term))
    return Relation(tuple(terms))


def export_dot(pres: GradedPresentation, name: str = 'presentation') -> str:
    """Graphviz description; degree-1 arrows are drawn thick."""
    lines = ['digraph "%s" {' % name, '  rankdir=LR;']
    lines.extend('  "%s";' % v for v in pres.quiver.vertices)
    for arrow in pres.quiver.arrows:
        degree = pres.degrees[arrow.id]
        style = 'penwidth=2.5' if degree == 1 else 'penwidth=1'
        if degree > 1:
            style += ', style=dashed'
        label = arrow.label.replace('\\', '\\\\').replace('"', '\\"')
        lines.append('  "%s" -> "%s" [label="%s", %s];' % (arrow.source, arrow.target, label, style))
    lines.append('}')
    return '\n'.join(lines) + '\n'


def path_to_list(path: Path) -> List[str]:
    return list(path.arrows) if path.arrows else ['[%s]' % path.source]


def presentation_to_dict(pres: GradedPresentation) -> Dict:
    return {
        'vertices': list(pres.quiver.vertices),
        'arrows': [
            {'id': a.id, 'label': a.label, 'source': a.source, 'target': a.target,
             'degree': pres.degrees[a.id]}
            for a in pres.quiver.arrows
        ],
        'relations': [
            {'source': relation.source, 'target': relation.target,
             'terms': [{'coefficient': str(c), 'path': path_to_list(p)} for c, p in relation.terms]}
            for relation in pres.relations
        ],
        'counts': {'vertices': pres.vertex_count, 'arrows': pres.arrow_count,
                   'relations': len(pres.relations)},
    }
