from fractions import Fraction
from math import factorial
from typing import Iterable

from ladderwood.verify.base import BaseSuite, Case, exact_equal
from ladderwood.wavefunction.bra import Space
from ladderwood.wavefunction.derivation import derive_wavefunction, isomorphic
from ladderwood.wavefunction.hermite import hermite_recurrence, hermite_reduction
from ladderwood.wavefunction.integrals import is_orthonormal


def _matches_closed_form(n: int, space: Space):
    f = derive_wavefunction(n, space)
    expected = (hermite_recurrence(n).to_poly(), Fraction(1, 2 ** n * factorial(n)), Fraction(1, 2))
    return exact_equal((f.poly, f.scale_sq, f.gaussian_rate), expected)


class WavefunctionsSuite(BaseSuite):
    """ The exponential pipeline against the Hermite recurrence, exact orthonormality and the x/p isomorphism. """
    name = 'wavefunctions'

    def cases(self) -> Iterable[Case]:
        for n in range(self.settings.max_hermite + 1):
            yield f'reduction H_{n} = recurrence H_{n}', \
                lambda n=n: exact_equal(hermite_reduction(n), hermite_recurrence(n))
            for space in Space:
                yield f'{space.value} pipeline n={n}', lambda n=n, space=space: _matches_closed_form(n, space)

        nmax = self.settings.max_orthonormal
        for space in Space:
            yield f'{space.value} orthonormal n <= {nmax}', \
                lambda space=space: (is_orthonormal([derive_wavefunction(n, space) for n in range(nmax + 1)]), '')
        for n in range(nmax + 1):
            yield f'x/p isomorphic n={n}', lambda n=n: (isomorphic(n), '')
            yield f'parity n={n}', lambda n=n: (derive_wavefunction(n).has_parity(), '')
