"""JSON and text renderings of pipeline reports."""

import json
from typing import Any, Dict

from ..models import TiltReport
from .codec import presentation_to_dict, serialize


def report_to_dict(report: TiltReport) -> Dict[str, Any]:
    return {
        'status': report.status,
        'input': report.input,
        'hypotheses': report.hypotheses,
        'route': report.route,
        'presentation': presentation_to_dict(report.presentation) if report.presentation else None,
        'cross_checks': report.cross_checks,
    }


def to_json(data: Any) -> str:
    return json.dumps(data, sort_keys=True, indent=2) + '\n'


def _value(value: Any) -> str:
    if isinstance(value, (dict, list)):
        return json.dumps(value, sort_keys=True)
    return str(value)


def report_to_text(report: TiltReport) -> str:
    lines = ['status: %s' % report.status]
    for section in ('input', 'hypotheses', 'route'):
        values = getattr(report, section)
        if values:
            lines.append('%s:' % section)
            lines.extend('  %s: %s' % (key, _value(values[key])) for key in sorted(values))
    if report.cross_checks:
        lines.append('cross_checks:')
        for name in sorted(report.cross_checks):
            passed = report.cross_checks[name].get('passed')
            lines.append('  %s: %s' % (name, 'passed' if passed else 'FAILED'))
    if report.presentation is not None:
        lines.append('presentation:')
        lines.extend('  ' + line for line in serialize(report.presentation).splitlines())
    return '\n'.join(lines) + '\n'
