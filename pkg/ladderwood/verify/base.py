from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, List, Tuple

import numpy as np
from dataclasses_json import dataclass_json

from ladderwood.algebra.ket import FockKetExpansion
from ladderwood.algebra.operator import LadderWord, OperatorPoly
from ladderwood.api.types import IdentityReport, VerifySettings
from ladderwood.exponential.affine import AffineForm
from ladderwood.helpers.log import log, timed
from ladderwood.scalar.field import FieldScalar


# a case returns (passed, detail)
Outcome = Tuple[bool, str]
Case = Tuple[str, Callable[[], Outcome]]


@dataclass_json
@dataclass
class CheckResult:
    suite: str
    name: str
    passed: bool
    detail: str = ''

    def line(self) -> str:
        status = 'pass' if self.passed else 'FAIL'
        return f'[{self.suite}] {self.name}: {status}' + (f' ({self.detail})' if self.detail else '')

    @staticmethod
    def from_report(suite: str, report: IdentityReport) -> 'CheckResult':
        return CheckResult(suite, report.name, report.passed,
                           f'N={report.dimension}, block={report.protected_block}, '
                           f'residual={report.max_residual:.3e}')


def exact_zero(residual) -> Outcome:
    """ Passes iff an exact residual (operator or scalar) vanishes. """
    zero = residual.is_zero() if hasattr(residual, 'is_zero') else residual == 0
    return zero, '' if zero else f'residual {residual}'


def exact_equal(observed, expected) -> Outcome:
    equal = observed == expected
    return equal, '' if equal else f'got {observed}, expected {expected}'


def random_scalar(rng: np.random.Generator) -> FieldScalar:
    """ Small Gaussian-rational field elements, occasionally carrying sqrt2. """
    real = Fraction(int(rng.integers(-4, 5)), int(rng.integers(1, 4)))
    imag = Fraction(int(rng.integers(-4, 5)), int(rng.integers(1, 4)))
    root = Fraction(int(rng.integers(-1, 2)), 2) if rng.random() < 0.25 else Fraction(0)
    return FieldScalar(real, imag, root)


def random_operator(rng: np.random.Generator, max_degree: int = 6, max_terms: int = 4) -> OperatorPoly:
    terms = {}
    for _ in range(int(rng.integers(1, max_terms + 1))):
        creation = int(rng.integers(0, max_degree + 1))
        annihilation = int(rng.integers(0, max_degree - creation + 1))
        terms[LadderWord(creation, annihilation)] = random_scalar(rng)
    return OperatorPoly(terms)


def random_letters(rng: np.random.Generator, max_length: int = 7) -> List[str]:
    return [('a', 'ad')[int(bit)] for bit in rng.integers(0, 2, size=int(rng.integers(0, max_length + 1)))]


def random_ket(rng: np.random.Generator, max_level: int = 6) -> FockKetExpansion:
    levels = rng.choice(max_level + 1, size=int(rng.integers(1, 4)), replace=False)
    return FockKetExpansion({int(n): random_scalar(rng) for n in levels})


class BaseSuite:
    """
    Base class for the invariant suites run by ``ladderwood verify``.

    A suite yields named cases from ``cases()``; ``run()`` executes each of them and turns the outcome into a
    ``CheckResult``. A case that raises counts as a failure, and the exception text becomes its detail.

    Class Attributes:
    - name: identifier used by ``--suite`` and in every report line.
    """  # noqa
    name: str

    def __init__(self, settings: VerifySettings = None):
        """
        :param settings: sizes of the generated cases; the defaults reproduce the acceptance ranges.
        """
        self.settings = settings if settings is not None else VerifySettings()
        self.runtime_log = {}

    def rng(self) -> np.random.Generator:
        return np.random.default_rng(self.settings.seed_nr)

    def cases(self) -> Iterable[Case]:
        raise NotImplementedError()

    @timed
    def run(self) -> List[CheckResult]:
        results = []
        for name, case in self.cases():
            try:
                passed, detail = case()
            except Exception as e:
                log.error(f'[{self.name}] {name} raised {type(e).__name__}: {e}')
                passed, detail = False, f'{type(e).__name__}: {e}'
            results.append(CheckResult(self.name, name, passed, detail))
        return results


def random_affine(rng: np.random.Generator) -> AffineForm:
    return AffineForm(random_scalar(rng), random_scalar(rng), random_scalar(rng))
