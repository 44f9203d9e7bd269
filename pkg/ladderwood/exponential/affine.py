from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from ladderwood.algebra.operator import LadderWord, OperatorPoly
from ladderwood.helpers.errors import UnsupportedExponent
from ladderwood.helpers.log import log
from ladderwood.scalar.field import FieldScalar
from ladderwood.scalar.poly import ScalarPoly


AFFINE_WORDS = (LadderWord(1, 0), LadderWord(0, 1), LadderWord(0, 0))


@dataclass(frozen=True)
class AffineForm:
    """
    ``alpha * ad + beta * a + gamma`` with coefficients polynomial in xi.

    The commutator of two affine forms is always central: [A, B] = beta_A * alpha_B - alpha_A * beta_B.
    """
    alpha: ScalarPoly = field(default_factory=ScalarPoly)
    beta: ScalarPoly = field(default_factory=ScalarPoly)
    gamma: ScalarPoly = field(default_factory=ScalarPoly)

    def __post_init__(self):
        for name in ('alpha', 'beta', 'gamma'):
            object.__setattr__(self, name, ScalarPoly.of(getattr(self, name)))

    @staticmethod
    def from_operator(operator: OperatorPoly) -> 'AffineForm':
        for word in operator.terms:
            if word not in AFFINE_WORDS:
                log.error(f'Exponent {operator} is not affine in the ladder operators')
                raise UnsupportedExponent(f'{operator} is not an affine form in a and ad (offending word {word})')
        return AffineForm(operator.coefficient(1, 0), operator.coefficient(0, 1), operator.coefficient(0, 0))

    @staticmethod
    def coerce(value: Union['AffineForm', OperatorPoly]) -> 'AffineForm':
        if isinstance(value, AffineForm):
            return value
        return AffineForm.from_operator(value)

    def to_operator(self) -> OperatorPoly:
        return OperatorPoly({LadderWord(1, 0): self.alpha, LadderWord(0, 1): self.beta, LadderWord(0, 0): self.gamma})

    def is_zero(self) -> bool:
        return self.alpha.is_zero() and self.beta.is_zero() and self.gamma.is_zero()

    def is_central(self) -> bool:
        return self.alpha.is_zero() and self.beta.is_zero()

    def ladder_part(self) -> 'AffineForm':
        return AffineForm(self.alpha, self.beta)

    def commutator_with(self, other: 'AffineForm') -> ScalarPoly:
        return self.beta * other.alpha - self.alpha * other.beta

    def __add__(self, other: 'AffineForm') -> 'AffineForm':
        if not isinstance(other, AffineForm):
            return NotImplemented
        return AffineForm(self.alpha + other.alpha, self.beta + other.beta, self.gamma + other.gamma)

    def __neg__(self) -> 'AffineForm':
        return self.negate()

    def __sub__(self, other: 'AffineForm') -> 'AffineForm':
        if not isinstance(other, AffineForm):
            return NotImplemented
        return self + other.negate()

    def negate(self) -> 'AffineForm':
        return AffineForm(-self.alpha, -self.beta, -self.gamma)

    def scaled(self, factor: Union[ScalarPoly, FieldScalar, Fraction, int]) -> 'AffineForm':
        f = ScalarPoly.of(factor)
        return AffineForm(self.alpha * f, self.beta * f, self.gamma * f)

    def __str__(self) -> str:
        return str(self.to_operator())


def hadamard_conjugate(exponent: Union[AffineForm, OperatorPoly], operator: OperatorPoly) -> OperatorPoly:
    """
    e^A B e^-A for an affine exponent A.

    The nested-commutator series stops after one step on each generator, [A, ad] = beta and [A, a] = -alpha, and
    conjugation is an algebra homomorphism, so B is rewritten with ad -> ad + beta and a -> a - alpha.
    """
    form = AffineForm.coerce(exponent)
    if form.is_central():
        return operator
    creation_image = OperatorPoly.creation() + form.beta
    annihilation_image = OperatorPoly.annihilation() - form.alpha
    return operator.substitute(creation_image, annihilation_image)
