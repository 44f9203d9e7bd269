from typing import Dict, Iterable, List, Tuple, Type

from ladderwood.api.types import VerifySettings
from ladderwood.helpers.errors import InvalidArgument
from ladderwood.helpers.log import log
from ladderwood.helpers.parallelism import parallel_map
from ladderwood.verify.algebra import AlgebraSuite
from ladderwood.verify.base import BaseSuite, CheckResult
from ladderwood.verify.exponentials import ExponentialsSuite
from ladderwood.verify.factorization import FactorizationSuite
from ladderwood.verify.oracle import OracleSuite
from ladderwood.verify.parser import ParserSuite
from ladderwood.verify.wavefunctions import WavefunctionsSuite


SUITES: Dict[str, Type[BaseSuite]] = {
    suite.name: suite for suite in (AlgebraSuite, ExponentialsSuite, FactorizationSuite, WavefunctionsSuite,
                                    OracleSuite, ParserSuite)
}


def suite_names(selection: str = 'all') -> List[str]:
    if selection == 'all':
        return list(SUITES)
    if selection not in SUITES:
        log.error(f'Unknown suite: {selection}')
        raise InvalidArgument(f'Unknown suite {selection!r}, expected one of {["all"] + list(SUITES)}')
    return [selection]


def run_suite(job: Tuple[str, VerifySettings]) -> List[CheckResult]:
    """ Module-level so that process pools can pickle it. """
    name, settings = job
    suite = SUITES[name](settings)
    results = suite.run()
    failed = sum(not r.passed for r in results)
    log.info(f'Suite {name}: {len(results) - failed}/{len(results)} checks passed')
    return results


def run_suites(selection: str = 'all', settings: VerifySettings = None, nr_procs: int = None) -> List[CheckResult]:
    """
    Runs the selected suites, one task per suite, and returns their results in a fixed suite order.

    :param selection: a suite name or 'all'.
    :param settings: case sizes and oracle knobs.
    :param nr_procs: worker processes; 1 runs everything in-process.
    """
    settings = settings if settings is not None else VerifySettings()
    names = suite_names(selection)
    by_suite = parallel_map(run_suite, [(name, (name, settings)) for name in names], nr_procs)
    return [result for name in names for result in by_suite[name]]


def report(results: Iterable[CheckResult]) -> Tuple[List[str], bool]:
    results = list(results)
    lines = [r.line() for r in results]
    passed = all(r.passed for r in results)
    failed = sum(not r.passed for r in results)
    lines.append(f'{len(results) - failed}/{len(results)} checks passed')
    return lines, passed
