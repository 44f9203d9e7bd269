from fractions import Fraction
from typing import Iterable

from ladderwood.algebra.operator import OperatorPoly
from ladderwood.factorization.dialects import Dialect, dialect
from ladderwood.factorization.ladder import build_ladder, check_adjoint_intertwining, check_intertwining, \
    norm_product, raising_intertwining_residual, spectrum
from ladderwood.factorization.superpotential import OSCILLATOR
from ladderwood.verify.base import BaseSuite, Case, Outcome, exact_equal, exact_zero


def _norm_product_agrees(energy: Fraction, j: int, ladder) -> Outcome:
    # norm_product raises when the operator string disagrees
    value = norm_product(energy, j, ladder)
    return True, f'{value}'


class FactorizationSuite(BaseSuite):
    """ Spectrum, factorized Hamiltonian, intertwining at every rung, norm products and the dialect operators. """
    name = 'factorization'

    def cases(self) -> Iterable[Case]:
        nmax = self.settings.max_spectrum
        yield f'E_n = n + 1/2 for n <= {nmax}', \
            lambda: exact_equal(spectrum(nmax), [Fraction(2 * n + 1, 2) for n in range(nmax + 1)])

        lowering, raising = OSCILLATOR.lowering_operator(), OSCILLATOR.raising_operator()
        yield 'H = A0^dag A0 + 1/2', \
            lambda: exact_zero(OperatorPoly.hamiltonian() - (raising * lowering + Fraction(1, 2)))
        yield 'p^2/2 + V = H', lambda: exact_equal(OSCILLATOR.hamiltonian(), OperatorPoly.hamiltonian())
        yield 'V = x^2/2', lambda: (OSCILLATOR.reproduces_oscillator(), '')
        yield 'H ad = ad (H + 1)', lambda: exact_zero(raising_intertwining_residual())

        rungs = self.settings.max_ladder_rung
        ladder = build_ladder(rungs + 1)
        for j in range(rungs + 1):
            yield f'H_{j + 1} A_{j} = A_{j} H_{j}', lambda j=j: exact_zero(check_intertwining(ladder, j))
            yield f'A_{j}^dag H_{j + 1} = H_{j} A_{j}^dag', \
                lambda j=j: exact_zero(check_adjoint_intertwining(ladder, j))

        for level in range(rungs + 1):
            energy = ladder.energies[level]
            for j in range(rungs + 1):
                yield f'norm product E_{level}, j={j}', \
                    lambda energy=energy, j=j: _norm_product_agrees(energy, j, ladder)

        for name in Dialect:
            yield f'{name.value}: defining commutator = 1', \
                lambda name=name: exact_equal(dialect(name).defining_commutator(), OperatorPoly.identity())
            yield f'{name.value}: H = raising*lowering + 1/2', \
                lambda name=name: exact_equal(dialect(name).hamiltonian(), OperatorPoly.hamiltonian())
            yield f'{name.value}: H = lowering*raising - 1/2', \
                lambda name=name: exact_equal(dialect(name).alternate_hamiltonian(), OperatorPoly.hamiltonian())
