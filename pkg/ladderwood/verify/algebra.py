from fractions import Fraction
from functools import reduce
from typing import Iterable

from ladderwood.algebra.ket import matrix_element
from ladderwood.algebra.operator import OperatorPoly, commutator, normal_order_word
from ladderwood.factorization.ladder import positivity_witness
from ladderwood.scalar.field import I
from ladderwood.verify.base import BaseSuite, Case, exact_equal, exact_zero, random_ket, random_letters, \
    random_operator


_GENERATOR = {'a': OperatorPoly.annihilation(), 'ad': OperatorPoly.creation()}


def _product_of_letters(letters) -> OperatorPoly:
    return reduce(lambda left, letter: left * _GENERATOR[letter], letters, OperatorPoly.identity())


class AlgebraSuite(BaseSuite):
    """ Canonical commutation relations, both normal-ordering paths, adjoints and number-basis matrix elements. """
    name = 'algebra'

    def cases(self) -> Iterable[Case]:
        a, ad = OperatorPoly.annihilation(), OperatorPoly.creation()
        yield '[a, ad] = 1', lambda: exact_equal(commutator(a, ad), OperatorPoly.identity())
        yield '[x, p] = i', lambda: exact_equal(commutator(OperatorPoly.position(), OperatorPoly.momentum()),
                                                OperatorPoly.scalar(I))
        yield 'a*ad = ad*a + 1', lambda: exact_equal(normal_order_word(['a', 'ad']), ad * a + 1)
        yield 'H = N + 1/2', lambda: exact_equal(OperatorPoly.hamiltonian(), OperatorPoly.number() + Fraction(1, 2))

        for n in range(1, self.settings.max_commutator_power + 1):
            yield f'[a, ad^{n}] = {n} ad^{n - 1}', \
                lambda n=n: exact_equal(commutator(a, ad ** n), OperatorPoly.word(n - 1, 0, n))

        rng = self.rng()
        for k in range(self.settings.random_cases):
            letters = random_letters(rng)
            yield f'bubble = contraction #{k}', \
                lambda letters=letters: exact_equal(normal_order_word(letters), _product_of_letters(letters))

        for k in range(self.settings.random_cases):
            x, y, z = (random_operator(rng, max_degree=3) for _ in range(3))
            yield f'associativity #{k}', lambda x=x, y=y, z=z: exact_zero((x * y) * z - x * (y * z))
            yield f'(AB)^dag = B^dag A^dag #{k}', \
                lambda x=x, y=y: exact_zero((x * y).adjoint() - y.adjoint() * x.adjoint())
            yield f'Jacobi identity #{k}', lambda x=x, y=y, z=z: exact_zero(
                commutator(x, commutator(y, z)) + commutator(y, commutator(z, x)) + commutator(z, commutator(x, y)))

        yield '<1|ad|0> = 1', lambda: exact_equal(matrix_element(1, ad, 0), 1)
        for n in range(self.settings.max_ladder_rung + 1):
            yield f'<{n}|N|{n}> = {n}', lambda n=n: exact_equal(matrix_element(n, OperatorPoly.number(), n), n)

        for k in range(self.settings.random_cases):
            ket = random_ket(rng)
            yield f'||a psi||^2 = <psi|N|psi> #{k}', lambda ket=ket: (positivity_witness(ket).sign() >= 0, '')
