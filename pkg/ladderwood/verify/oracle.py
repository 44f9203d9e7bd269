from fractions import Fraction
from typing import Iterable

import numpy as np

from ladderwood.algebra.operator import OperatorPoly
from ladderwood.api.types import IdentityReport
from ladderwood.exponential.affine import AffineForm
from ladderwood.oracle.checks import bch_check, boost_check, braid_check, convergence_check, hadamard_check, \
    matrix_element_check, translation_check, unitarity_check
from ladderwood.oracle.fock import truncation_artifact
from ladderwood.oracle.grid import PositionGrid, grid_check
from ladderwood.scalar.field import FieldScalar
from ladderwood.verify.base import BaseSuite, Case, CheckResult, Outcome, random_operator


HALF = Fraction(1, 2)
THIRD = Fraction(1, 3)

# displacement parameters stay within 1/2 so truncation pollution never reaches the protected block
FORMS = (
    AffineForm(HALF, -HALF),
    AffineForm(FieldScalar(0, THIRD), FieldScalar(0, THIRD)),
    AffineForm(Fraction(1, 4), THIRD),
    AffineForm(FieldScalar(Fraction(1, 5), Fraction(1, 5)), Fraction(-1, 4)),
)
UNITARY_FORMS = (
    AffineForm(HALF, -HALF),
    AffineForm(FieldScalar(0, THIRD), FieldScalar(0, THIRD)),
    AffineForm(FieldScalar(Fraction(1, 5), Fraction(1, 5)), FieldScalar(Fraction(-1, 5), Fraction(1, 5))),
)
SHIFTS = (HALF, -THIRD, Fraction(1, 4))


def _outcome(report: IdentityReport):
    return report.passed, CheckResult.from_report('', report).detail


def truncation_artifact_outcome(dimension: int) -> Outcome:
    """ Diagonal of the truncated [a, ad] against (1, ..., 1, 1 - N), up to rounding in sqrt(n)^2. """
    expected = np.ones(dimension)
    expected[-1] = 1 - dimension
    observed = truncation_artifact(dimension)
    return bool(np.allclose(observed, expected, rtol=0, atol=1e-12)), f'last diagonal entry {observed[-1]:g}'


class OracleSuite(BaseSuite):
    """ The exact engine against truncated number-basis matrices. """
    name = 'oracle'

    def cases(self) -> Iterable[Case]:
        settings = self.settings.oracle
        for k, a in enumerate(FORMS):
            for m, b in enumerate(FORMS):
                if k == m:
                    continue
                yield f'braid #{k},{m}', lambda a=a, b=b: _outcome(braid_check(a, b, settings))
                yield f'bch #{k},{m}', lambda a=a, b=b: _outcome(bch_check(a, b, settings))
            yield f'hadamard #{k}', lambda a=a: _outcome(hadamard_check(a, OperatorPoly.hamiltonian(), settings))
        for k, a in enumerate(UNITARY_FORMS):
            yield f'unitary #{k}', lambda a=a: _outcome(unitarity_check(a, settings))
        for shift in SHIFTS:
            yield f'translation x0={shift}', lambda shift=shift: _outcome(translation_check(shift, settings))
            yield f'boost p0={shift}', lambda shift=shift: _outcome(boost_check(shift, settings))

        yield 'braid converges from N=32 to N=64', lambda: (convergence_check(
            'braid', lambda n: braid_check(FORMS[0], FORMS[2], settings, dimension=n))[2], '')
        yield 'truncation artifact', lambda: truncation_artifact_outcome(settings.matel_dimension)

        rng = self.rng()
        for k in range(self.settings.random_cases):
            operator = random_operator(rng, max_degree=6)
            yield f'matrix elements #{k}', lambda op=operator: _outcome(matrix_element_check(op, settings))

        grid = PositionGrid.build(settings.grid_dimension)
        for n in range(self.settings.max_ladder_rung + 1):
            for space in ('position', 'momentum'):
                yield f'grid {space} n={n}', \
                    lambda n=n, space=space: _outcome(grid_check(n, settings, space, grid))
