from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from ladderwood.algebra.operator import OperatorPoly
from ladderwood.exponential.affine import AffineForm, hadamard_conjugate
from ladderwood.scalar.field import FieldScalar, I, INV_SQRT2
from ladderwood.scalar.poly import ScalarPoly


HALF = Fraction(1, 2)


@dataclass(frozen=True)
class NormalSplit:
    """ e^P * e^(alpha*ad) * e^(beta*a): creation exponential to the left. """
    log_prefactor: ScalarPoly
    alpha: ScalarPoly
    beta: ScalarPoly

    def creation_form(self) -> AffineForm:
        return AffineForm(alpha=self.alpha)

    def annihilation_form(self) -> AffineForm:
        return AffineForm(beta=self.beta)

    def __str__(self) -> str:
        return f'exp({self.log_prefactor}) * exp({self.creation_form()}) * exp({self.annihilation_form()})'


@dataclass(frozen=True)
class GroupElement:
    """
    Heisenberg group element ``e^(log_prefactor) * e^(exponent)``.

    The central part of the exponent is folded into ``log_prefactor`` on construction, which makes the presentation
    canonical and equality exact.
    """
    exponent: AffineForm = field(default_factory=AffineForm)
    log_prefactor: ScalarPoly = field(default_factory=ScalarPoly)

    def __post_init__(self):
        exponent = AffineForm.coerce(self.exponent)
        object.__setattr__(self, 'log_prefactor', ScalarPoly.of(self.log_prefactor) + exponent.gamma)
        object.__setattr__(self, 'exponent', exponent.ladder_part())

    @staticmethod
    def identity() -> 'GroupElement':
        return GroupElement()

    @staticmethod
    def of(exponent: Union[AffineForm, OperatorPoly]) -> 'GroupElement':
        return GroupElement(AffineForm.coerce(exponent))

    def is_identity(self) -> bool:
        return self.exponent.is_zero() and self.log_prefactor.is_zero()

    def compose(self, other: 'GroupElement') -> 'GroupElement':
        """ e^P1 e^F1 e^P2 e^F2 = e^(P1 + P2 + [F1,F2]/2) e^(F1 + F2). """
        central = self.exponent.commutator_with(other.exponent) * HALF
        return GroupElement(self.exponent + other.exponent, self.log_prefactor + other.log_prefactor + central)

    def __mul__(self, other: 'GroupElement') -> 'GroupElement':
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.compose(other)

    def inverse(self) -> 'GroupElement':
        return GroupElement(self.exponent.negate(), -self.log_prefactor)

    def normal_split(self) -> NormalSplit:
        """ e^(alpha*ad + beta*a) = e^(alpha*beta/2) e^(alpha*ad) e^(beta*a). """
        alpha, beta = self.exponent.alpha, self.exponent.beta
        return NormalSplit(self.log_prefactor + alpha * beta * HALF, alpha, beta)

    def conjugate(self, operator: OperatorPoly) -> OperatorPoly:
        """ g B g^-1; the central prefactor cancels. """
        return hadamard_conjugate(self.exponent, operator)

    def __str__(self) -> str:
        return f'exp({self.log_prefactor}) * exp({self.exponent})'


@dataclass(frozen=True)
class ReorderedProduct:
    """ e^first * e^second * e^central, the right-hand side of the braiding relation. """
    first: AffineForm
    second: AffineForm
    central: ScalarPoly

    def as_group_element(self) -> GroupElement:
        product = GroupElement.of(self.first).compose(GroupElement.of(self.second))
        return GroupElement(product.exponent, product.log_prefactor + self.central)

    def __str__(self) -> str:
        return f'exp({self.first}) * exp({self.second}) * exp({self.central})'


def braid(a: Union[AffineForm, OperatorPoly], b: Union[AffineForm, OperatorPoly]) -> ReorderedProduct:
    """ e^A e^B = e^B e^A e^[A,B] for a central commutator. """
    a, b = AffineForm.coerce(a), AffineForm.coerce(b)
    return ReorderedProduct(b, a, a.commutator_with(b))


def bch_compose(a: Union[AffineForm, OperatorPoly], b: Union[AffineForm, OperatorPoly]) -> GroupElement:
    """ e^A e^B = e^(A + B + [A,B]/2). """
    return GroupElement.of(a).compose(GroupElement.of(b))


def translation_operator(x0: Union[ScalarPoly, FieldScalar, Fraction, int]) -> GroupElement:
    """ e^(-i x0 p) = e^(x0 (ad - a)/sqrt2); maps |x=0> to |x0>. """
    c = ScalarPoly.of(x0) * INV_SQRT2
    return GroupElement(AffineForm(alpha=c, beta=-c))


def boost_operator(p0: Union[ScalarPoly, FieldScalar, Fraction, int]) -> GroupElement:
    """ e^(i p0 x) = e^(i p0 (a + ad)/sqrt2); maps |p=0> to |p0>. """
    c = ScalarPoly.of(p0) * (I * INV_SQRT2)
    return GroupElement(AffineForm(alpha=c, beta=c))


def translation_residual(x0: Union[ScalarPoly, FieldScalar, Fraction, int]) -> OperatorPoly:
    """ x T(x0) - T(x0)(x + x0), written as T^-1 x T - (x + x0); zero when the shift identity holds. """
    x = OperatorPoly.position()
    return translation_operator(x0).inverse().conjugate(x) - (x + ScalarPoly.of(x0))


def boost_residual(p0: Union[ScalarPoly, FieldScalar, Fraction, int]) -> OperatorPoly:
    p = OperatorPoly.momentum()
    return boost_operator(p0).inverse().conjugate(p) - (p + ScalarPoly.of(p0))
