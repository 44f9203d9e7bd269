import argparse
import sys
from typing import List, Optional

from ladderwood.__about__ import __package_name__, __version__
from ladderwood.api.high_level import HERMITE_PATHS, commutator_text, energy_table, hermite, matel, \
    normal_order_text, verify, wavefunction
from ladderwood.api.types import VerifySettings
from ladderwood.helpers.errors import LadderwoodError, VerificationFailure
from ladderwood.helpers.log import log
from ladderwood.scalar.units import UnitSystem
from ladderwood.verify.runner import SUITES


EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog=__package_name__,
                                     description='Exact ladder-operator algebra for the harmonic oscillator.')
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    commands = parser.add_subparsers(dest='command', required=True)

    cmd = commands.add_parser('normal-order', help='canonical normal-ordered form of an expression')
    cmd.add_argument('expr')

    cmd = commands.add_parser('commutator', help='canonical form of [e1, e2]')
    cmd.add_argument('e1')
    cmd.add_argument('e2')

    cmd = commands.add_parser('matel', help='exact <m|expr|n> between normalized number states')
    cmd.add_argument('m', type=int)
    cmd.add_argument('expr')
    cmd.add_argument('n', type=int)

    cmd = commands.add_parser('wavefunction', help='closed-form eigenfunction from the exponential pipeline')
    cmd.add_argument('n', type=int)
    cmd.add_argument('--space', choices=('x', 'p'), default='x')
    cmd.add_argument('--json', action='store_true', help='print the structured record instead of the formula')
    cmd.add_argument('--units', choices=('natural', 'si'), default='natural')

    cmd = commands.add_parser('hermite', help='integer coefficients of H_n, ascending')
    cmd.add_argument('n', type=int)
    cmd.add_argument('--path', choices=HERMITE_PATHS, default='recurrence')

    cmd = commands.add_parser('verify', help='run the invariant suites')
    cmd.add_argument('--suite', choices=('all', *SUITES), default='all')
    cmd.add_argument('--workers', type=int, default=1, help='worker processes; 0 picks a count automatically')
    cmd.add_argument('--settings', help='path to a JSON file with VerifySettings fields')

    cmd = commands.add_parser('spectrum', help='E_n for n = 0..nmax')
    cmd.add_argument('nmax', type=int)
    return parser


def _verify(args) -> int:
    settings = None
    if args.settings:
        with open(args.settings) as fp:
            settings = VerifySettings.from_json(fp.read())
    lines, passed = verify(args.suite, settings, None if args.workers == 0 else args.workers)
    print('\n'.join(lines))
    return EXIT_OK if passed else EXIT_FAILED


def run(args) -> int:
    if args.command == 'normal-order':
        print(normal_order_text(args.expr))
    elif args.command == 'commutator':
        print(commutator_text(args.e1, args.e2))
    elif args.command == 'matel':
        print(matel(args.m, args.expr, args.n))
    elif args.command == 'wavefunction':
        f = wavefunction(args.n, args.space)
        print(f.to_record().to_json() if args.json else f.render(UnitSystem.from_name(args.units)))
    elif args.command == 'hermite':
        print(' '.join(str(c) for c in hermite(args.n, args.path).coefficients))
    elif args.command == 'spectrum':
        for n, energy in energy_table(args.nmax):
            print(f'E_{n} = {energy}')
    elif args.command == 'verify':
        return _verify(args)
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return run(args)
    except VerificationFailure as e:
        log.error(f'Verification failed: {e}')
        return EXIT_FAILED
    except (LadderwoodError, OSError) as e:
        log.error(str(e))
        return EXIT_USAGE


if __name__ == '__main__':
    sys.exit(main())
