from fractions import Fraction
from math import factorial
from typing import Iterable

from ladderwood.algebra.operator import OperatorPoly, commutator
from ladderwood.exponential.affine import AffineForm, hadamard_conjugate
from ladderwood.exponential.group import GroupElement, bch_compose, boost_residual, braid, translation_residual
from ladderwood.scalar.poly import XI
from ladderwood.verify.base import BaseSuite, Case, exact_equal, exact_zero, random_affine, random_operator


SHIFTS = (Fraction(1, 2), Fraction(-1, 3), 2, XI)


def hadamard_series(exponent: AffineForm, operator: OperatorPoly) -> OperatorPoly:
    """ B + [A,B] + [A,[A,B]]/2! + ..., summed until the nested commutator vanishes. """
    a = exponent.to_operator()
    total, nested, k = operator, operator, 0
    while True:
        k += 1
        nested = commutator(a, nested)
        if nested.is_zero():
            return total
        total = total + nested * Fraction(1, factorial(k))


def _normal_split_rebuilds(g: GroupElement):
    split = g.normal_split()
    rebuilt = GroupElement(split.creation_form(), split.log_prefactor).compose(
        GroupElement.of(split.annihilation_form()))
    return exact_equal(rebuilt, g)


class ExponentialsSuite(BaseSuite):
    """ Braiding, composition, Hadamard conjugation and the translation/boost shift identities, all exact. """
    name = 'exponentials'

    def cases(self) -> Iterable[Case]:
        rng = self.rng()
        for k in range(self.settings.random_cases):
            a, b = random_affine(rng), random_affine(rng)
            g = GroupElement.of(a)
            operator = random_operator(rng, max_degree=3)
            yield f'braid central = [A, B] #{k}', \
                lambda a=a, b=b: exact_equal(OperatorPoly.scalar(braid(a, b).central),
                                             commutator(a.to_operator(), b.to_operator()))
            yield f'braid = bch #{k}', lambda a=a, b=b: exact_equal(braid(a, b).as_group_element(), bch_compose(a, b))
            yield f'g g^-1 = 1 #{k}', lambda g=g: (g.compose(g.inverse()).is_identity(), '')
            yield f'normal split #{k}', lambda g=g: _normal_split_rebuilds(g)
            yield f'hadamard = series #{k}', \
                lambda a=a, op=operator: exact_equal(hadamard_conjugate(a, op), hadamard_series(a, op))

        for shift in SHIFTS:
            yield f'translation x0={shift}', lambda shift=shift: exact_zero(translation_residual(shift))
            yield f'boost p0={shift}', lambda shift=shift: exact_zero(boost_residual(shift))
