"""Command line entry point: ``tilt-forge {mckay|nabla|check|tilt|dual|truncate|export}``."""

import argparse
import logging
import os
import sys
from typing import Optional, Sequence

from dotenv import load_dotenv

from .api import ASSUMPTIONS, TiltForge
from .errors import DimensionBoundExceeded, InvalidArgumentException, TiltForgeException
from .helpers import get_degree_specs, get_positive_int, get_vertex_list
from .skewgroup import folded_name
from .tools import export_dot, presentation_to_dict, report_to_dict, report_to_text, serialize, to_json

logger = logging.getLogger(__name__)

FORMATS = ('text', 'json', 'dot')
COMMANDS = ('mckay', 'nabla', 'check', 'tilt', 'dual', 'truncate', 'export')

EXIT_OK = 0
EXIT_HYPOTHESIS = 2
EXIT_INCONCLUSIVE = 3
EXIT_INPUT = 4
EXIT_CROSS_CHECK = 5


def _settings() -> dict:
    load_dotenv()
    fmt = os.getenv('TILTFORGE_FORMAT', 'text')
    if fmt not in FORMATS:
        raise InvalidArgumentException('TILTFORGE_FORMAT must be one of %s: %s' % (', '.join(FORMATS), fmt))
    level = os.getenv('TILTFORGE_LOG_LEVEL', 'WARNING').upper()
    if not isinstance(logging.getLevelName(level), int):
        raise InvalidArgumentException('TILTFORGE_LOG_LEVEL is not a logging level: ' + level)
    return {
        'length_bound': get_positive_int(os.getenv('TILTFORGE_LENGTH_BOUND') or None, 'TILTFORGE_LENGTH_BOUND'),
        'format': fmt,
        'log_level': level,
    }


class ArgumentParser(argparse.ArgumentParser):
    """Reports bad arguments as ``InvalidArgumentException`` instead of exiting with status 2."""

    def error(self, message):
        raise InvalidArgumentException('%s: %s' % (self.prog, message))


def build_parser() -> ArgumentParser:
    common = ArgumentParser(add_help=False)
    source = common.add_argument_group('input')
    source.add_argument('--r', type=int, help='Order of the cyclic group.')
    source.add_argument('--weights', help='Comma separated weights a1,...,ad.')
    source.add_argument('--fixture', help='Built-in input: silting, levelled, kronecker or point.')
    source.add_argument('--presentation', metavar='FILE', help='Presentation in the text format.')
    source.add_argument('--ell', type=int, help='Gorenstein parameter, required for presentation files.')
    source.add_argument('--grading', metavar='FILE', help='Grading file, one "x1@0 = 1" per line.')
    source.add_argument('--deg', action='append', default=[], metavar='ARROW=DEGREE',
                        help='Degree of one arrow, e.g. x1@0=0. Repeatable.')
    source.add_argument('--default-degree', type=int, help='Degree of arrows the grading does not name.')
    source.add_argument('--e', help='Comma separated e-vertices.')
    source.add_argument('--assume', action='append', default=[], choices=ASSUMPTIONS,
                        help='Accept a hypothesis that cannot be checked for presentation files.')

    output = common.add_argument_group('output')
    output.add_argument('--length-bound', type=int, help='Path length at which algebras must vanish.')
    output.add_argument('--out', help='Write the result to this file (export: file name stem).')
    output.add_argument('--format', choices=FORMATS, help='Output format. Defaults to TILTFORGE_FORMAT or text.')
    output.add_argument('--log-level', help='Logging level. Defaults to TILTFORGE_LOG_LEVEL or WARNING.')

    parser = ArgumentParser(prog='tilt-forge', description='Tilting objects for graded singularity categories.')
    subparsers = parser.add_subparsers(dest='command', required=True)
    subparsers.add_parser('mckay', parents=[common], help='McKay quiver with its grading.')
    subparsers.add_parser('nabla', parents=[common], help='Beilinson quiver of the graded algebra.')
    subparsers.add_parser('check', parents=[common], help='Hypotheses of both construction routes.')
    tilt = subparsers.add_parser('tilt', parents=[common], help='Presentation of the tilting algebra.')
    tilt.add_argument('--route', choices=('auto', 'A', 'B'), default='auto')
    subparsers.add_parser('dual', parents=[common], help='Quadratic dual of a presentation.')
    truncate = subparsers.add_parser('truncate', parents=[common], help='Idempotent truncation.')
    truncate.add_argument('--keep', help='Comma separated vertices to keep.')
    subparsers.add_parser('export', parents=[common],
                          help='Write <out>.dot and <out>.json for the presentation file, else for the Beilinson quiver.')
    return parser


def _configure_logging(level: str) -> None:
    root = logging.getLogger('tiltforge')
    for handler in list(root.handlers):
        root.removeHandler(handler)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter('%(levelname)s %(name)s: %(message)s'))
    root.addHandler(handler)
    root.setLevel(level)


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, 'w') as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _render_presentation(pres, fmt: str) -> str:
    if fmt == 'json':
        return to_json(presentation_to_dict(pres))
    if fmt == 'dot':
        return export_dot(pres)
    return serialize(pres)


def _working_presentation(forge: TiltForge, inp, args):
    """The file presentation when one is given, else the Beilinson quiver of the group."""
    if args.presentation:
        return inp.presentation
    return forge.cmd_nabla(inp)


def run(args, settings: dict) -> int:
    fmt = args.format or settings['format']
    forge = TiltForge(args.length_bound or settings['length_bound'])
    inp = forge.load(r=args.r, weights=args.weights, fixture=args.fixture, presentation=args.presentation,
                     grading=args.grading, degrees=get_degree_specs(args.deg),
                     default_degree=args.default_degree, e_vertices=args.e, ell=args.ell,
                     assume=args.assume)

    if args.command in ('check', 'tilt'):
        if args.command == 'check':
            report = forge.cmd_check(inp)
        else:
            report = forge.cmd_tilt(inp, args.route)
        if fmt == 'json':
            text = to_json(report_to_dict(report))
        elif fmt == 'dot':
            if report.presentation is None:
                raise InvalidArgumentException('No presentation to draw: ' + report.status)
            text = export_dot(report.presentation)
        else:
            text = report_to_text(report)
        _emit(text, args.out)
        return report.exit_code

    if args.command == 'mckay':
        pres = forge.cmd_mckay(inp)
    elif args.command == 'nabla':
        pres = forge.cmd_nabla(inp)
    elif args.command == 'dual':
        pres = forge.cmd_dual(_working_presentation(forge, inp, args))
    elif args.command == 'truncate':
        working = _working_presentation(forge, inp, args)
        if args.keep:
            keep = get_vertex_list(args.keep)
        elif inp.e_vertices and not args.presentation:
            ell = forge.gorenstein(inp)
            removed = {folded_name(v, p) for v in inp.e_vertices for p in range(ell)}
            keep = [v for v in working.quiver.vertices if v not in removed]
        else:
            raise InvalidArgumentException('truncate needs --keep, or --e with a group input')
        pres = forge.cmd_truncate(working, keep)
    else:
        if not args.out:
            raise InvalidArgumentException('export needs --out')
        forge.cmd_export(_working_presentation(forge, inp, args), args.out)
        return EXIT_OK

    _emit(_render_presentation(pres, fmt), args.out)
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except InvalidArgumentException as error:
        parser.print_usage(sys.stderr)
        sys.stderr.write(error.reason + '\n')
        return EXIT_INPUT
    try:
        settings = _settings()
        _configure_logging((args.log_level or settings['log_level']).upper())
        return run(args, settings)
    except DimensionBoundExceeded as error:
        logger.error('%s', error)
        return EXIT_INCONCLUSIVE
    except TiltForgeException as error:
        logger.error('%s', error)
        return EXIT_INPUT
    except ValueError as error:
        logger.error('%s', error)
        return EXIT_INPUT


if __name__ == '__main__':
    sys.exit(main())
