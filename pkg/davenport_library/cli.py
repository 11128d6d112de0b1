import argparse
import logging
import sys
from typing import List, Optional

from .audit import DEFAULT_RANDOM_SETS, GroupIdentifier, closed_form_constants, run_table, run_verify
from .automorphism import automorphisms
from .cayley import cayley_diameter, cayley_witness
from .command_type import CommandType
from .config import EngineConfig
from .davenport_kind import DavenportKind
from .emit import emit
from .engine import davenport
from .errors import DavenportError, InvalidParameter, ResourceCap, UnknownGroup
from .formulas import beta_registry, reduction_case
from .group import Group
from .group_spec import resolve_group
from .registry import TABLE_ORDER_LIMIT

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_AUDIT_FAILED = 1
EXIT_ERROR = 2


def _output_format(args) -> str:
    if getattr(args, 'json', False):
        return 'json'
    if getattr(args, 'csv', False):
        return 'csv'
    return 'text'


def _add_output_flags(parser: argparse.ArgumentParser, csv: bool = True):
    group = parser.add_mutually_exclusive_group()
    group.add_argument('--json', action='store_true', help='JSON output, keys sorted')
    if csv:
        group.add_argument('--csv', action='store_true', help='CSV output')
    parser.add_argument('-o', '--output', default=None, help='write to this file instead of standard output')


def _add_engine_flags(parser: argparse.ArgumentParser):
    parser.add_argument('--cache', default=None, metavar='DIR', help='level dump directory (default: $DAV_CACHE_DIR)')
    parser.add_argument('--threads', type=int, default=None, help='workers for the splitting fan-out (default: $DAV_THREADS or 1)')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='dav', description='Davenport constants and Noether numbers of small finite groups')
    parser.add_argument('-v', '--verbose', action='count', default=0, help='-v for progress, -vv for debugging output')
    commands = parser.add_subparsers(dest='command', required=True)

    compute = commands.add_parser('compute', help='enumerate a small or large Davenport constant')
    compute.add_argument('kind', choices=[kind.value for kind in DavenportKind])
    compute.add_argument('--group', required=True, help='group expression, e.g. "C3:C4(d=2)" or "gap(27,3)"')
    compute.add_argument('--max-level', type=int, default=None, help='stop after sequences of this length')
    compute.add_argument('--timings', action='store_true', help='include the wall time')
    _add_engine_flags(compute)
    _add_output_flags(compute)

    table = commands.add_parser('table', help='reproduce the table of non-abelian groups of order less than 32')
    table.add_argument('--fast', action='store_true', help='use closed formulas where they apply')
    table.add_argument('--order-max', type=int, default=TABLE_ORDER_LIMIT)
    table.add_argument('--order-min', type=int, default=1)
    table.add_argument('--progress', action='store_true', help='progress bar on stderr')
    _add_engine_flags(table)
    _add_output_flags(table)

    verify = commands.add_parser('verify', help='audit d+1 <= beta <= D, monotonicity of beta and the diameter bound')
    verify.add_argument('--order-max', type=int, default=TABLE_ORDER_LIMIT)
    verify.add_argument('--stored', action='store_true', help='audit the stored table constants instead of computing them')
    verify.add_argument('--fast', action='store_true', help='compute the table with closed formulas where they apply')
    verify.add_argument('--random-sets', type=int, default=DEFAULT_RANDOM_SETS,
                        help=f'random generating sets per group of order <= 16 (default {DEFAULT_RANDOM_SETS})')
    verify.add_argument('--seed', type=int, default=0)
    verify.add_argument('--progress', action='store_true', help='progress bar on stderr')
    _add_engine_flags(verify)
    _add_output_flags(verify)

    diameter = commands.add_parser('diameter', help='diameter of a Cayley digraph')
    diameter.add_argument('--group', required=True)
    diameter.add_argument('--gens', default=None, help='comma separated element indices (default: greedy generating set)')
    _add_output_flags(diameter, csv=False)

    aut = commands.add_parser('aut', help='order of the automorphism group')
    aut.add_argument('--group', required=True)
    _add_output_flags(aut, csv=False)

    formulas = commands.add_parser('formulas', help='closed-form constants and bounds that apply to a group')
    formulas.add_argument('--group', required=True)
    _add_output_flags(formulas, csv=False)
    return parser


def command_of(args) -> CommandType:
    if args.command == 'compute':
        return CommandType.COMPUTE_SMALL if args.kind == DavenportKind.SMALL.value else CommandType.COMPUTE_LARGE
    return CommandType(args.command)


def _configure_logging(verbosity: int):
    level = logging.WARNING if verbosity == 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(level=level, format='%(levelname)s %(name)s: %(message)s', stream=sys.stderr)


def _engine_config(args, **overrides) -> EngineConfig:
    return EngineConfig.from_environment(cache_dir=args.cache, threads=args.threads, **overrides)


def _parse_generators(text: str) -> List[int]:
    try:
        return [int(part) for part in text.replace(' ', '').strip('[]').split(',') if part]
    except ValueError:
        raise InvalidParameter(f"generators must be comma separated integers, got {text!r}")


def _write_mapping(document: dict, args):
    emit(document, _output_format(args), args.output)


def _identify(G: Group) -> Optional[tuple]:
    if G.get_gap_id() is not None:
        return G.get_gap_id()
    if G.order > TABLE_ORDER_LIMIT:
        return None
    try:
        return GroupIdentifier().identify(G)
    except UnknownGroup:
        return None


def _compute(args) -> int:
    G = resolve_group(args.group)
    config = _engine_config(args, max_level=args.max_level)
    try:
        report = davenport(G, DavenportKind(args.kind), config)
    except ResourceCap as error:
        if error.report is not None:
            emit(error.report, _output_format(args), args.output, args.timings)
        raise
    emit(report, _output_format(args), args.output, args.timings)
    return EXIT_OK


def _table(args) -> int:
    report = run_table(args.order_max, args.order_min, args.fast, _engine_config(args), args.progress)
    emit(report, _output_format(args), args.output)
    return EXIT_OK if report.ok() else EXIT_AUDIT_FAILED


def _verify(args) -> int:
    report = run_verify(args.order_max, random_sets=args.random_sets, seed=args.seed, progress=args.progress, stored=args.stored,
                        fast=args.fast, config=_engine_config(args))
    emit(report, _output_format(args), args.output)
    return EXIT_OK if report.ok() else EXIT_AUDIT_FAILED


def _diameter(args) -> int:
    G = resolve_group(args.group)
    generators = _parse_generators(args.gens) if args.gens else G.greedy_generators()
    diameter = cayley_diameter(G, generators)
    _write_mapping({'group': G.name, 'generators': generators, 'diameter': diameter,
                    'witness': list(cayley_witness(G, generators)), 'large_davenport_lower_bound': diameter + 1}, args)
    return EXIT_OK


def _aut(args) -> int:
    G = resolve_group(args.group)
    _write_mapping({'group': G.name, 'order': G.order, 'automorphisms': len(automorphisms(G))}, args)
    return EXIT_OK


def _formulas(args) -> int:
    G = resolve_group(args.group)
    document = {'group': G.name, 'order': G.order}
    gap_id = _identify(G)
    if gap_id is not None:
        document['gap_id'] = list(gap_id)
        record = beta_registry(gap_id)
        document['beta'] = record.beta
        document['beta_source'] = record.source
        try:
            case = reduction_case(gap_id)
            document['reduction_lower'] = case.lower()
            document['reduction_upper'] = case.upper()
        except UnknownGroup:
            pass
    try:
        constants = closed_form_constants(G)
    except DavenportError as error:
        logger.info("no closed form for %s: %s", G.name, error)
        constants = None
    if constants is not None:
        document['d'], document['D'] = constants
    _write_mapping(document, args)
    return EXIT_OK


_HANDLERS = {
    CommandType.COMPUTE_SMALL: _compute,
    CommandType.COMPUTE_LARGE: _compute,
    CommandType.TABLE: _table,
    CommandType.VERIFY: _verify,
    CommandType.DIAMETER: _diameter,
    CommandType.AUT: _aut,
    CommandType.FORMULAS: _formulas,
}


def main(argv: Optional[List[str]] = None) -> int:
    """
    Entry point of the dav command.

    Returns:
        int: 0 on success, 1 if an audit failed, 2 on an error.
    """
    args = build_parser().parse_args(argv)
    _configure_logging(args.verbose)
    try:
        return _HANDLERS[command_of(args)](args)
    except DavenportError as error:
        sys.stderr.write(f"dav: {error}\n")
        return EXIT_ERROR
    except OSError as error:
        sys.stderr.write(f"dav: {error}\n")
        return EXIT_ERROR


if __name__ == '__main__':
    sys.exit(main())
