from ladderwood.verify.base import BaseSuite, CheckResult
from ladderwood.verify.algebra import AlgebraSuite
from ladderwood.verify.exponentials import ExponentialsSuite
from ladderwood.verify.factorization import FactorizationSuite
from ladderwood.verify.wavefunctions import WavefunctionsSuite
from ladderwood.verify.oracle import OracleSuite
from ladderwood.verify.parser import ParserSuite, CORPUS
from ladderwood.verify.runner import SUITES, suite_names, run_suite, run_suites, report


__all__ = ['BaseSuite', 'CheckResult', 'AlgebraSuite', 'ExponentialsSuite', 'FactorizationSuite',
           'WavefunctionsSuite', 'OracleSuite', 'ParserSuite', 'CORPUS', 'SUITES', 'suite_names', 'run_suite',
           'run_suites', 'report']
