from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from ladderwood.algebra.operator import OperatorPoly, commutator
from ladderwood.helpers.errors import InvalidArgument
from ladderwood.scalar.field import FieldScalar, I, INV_SQRT2


@dataclass(frozen=True)
class SuperpotentialLinear:
    """
    Linear superpotential W(x) = slope * x, entering the lowering operator as

        A = p/sqrt2 + (i/sqrt2) * k_pre * W(x),     k_pre * slope = k

    Only the product ``k`` of the two wavenumbers matters. The oscillator needs k = -1 in natural units, which
    fixes the ground-state energy to 1/2.

    :param k: product of the prefactor wavenumber and the slope.
    :param slope: the slope of W; any nonzero value gives the same operators.
    """
    k: Fraction = Fraction(-1)
    slope: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, 'k', Fraction(self.k))
        object.__setattr__(self, 'slope', Fraction(self.slope))
        if self.slope == 0:
            raise InvalidArgument('The superpotential slope must be nonzero')

    @property
    def prefactor(self) -> Fraction:
        return self.k / self.slope

    def superpotential(self) -> OperatorPoly:
        return OperatorPoly.position() * self.slope

    def lowering_operator(self) -> OperatorPoly:
        return (OperatorPoly.momentum() + self.superpotential() * (I * self.prefactor)) * INV_SQRT2

    def raising_operator(self) -> OperatorPoly:
        return self.lowering_operator().adjoint()

    def ground_energy(self) -> Fraction:
        """ A^dag A = p^2/2 + k/2 + k^2 x^2/2, so the constant-free potential needs E0 = -k/2. """
        return -self.k / 2

    def potential(self) -> OperatorPoly:
        """ V = (i/2) k_pre [p, W] + (k_pre^2 / 2) W^2 + E0. """
        w = self.superpotential()
        p = OperatorPoly.momentum()
        pre = self.prefactor
        return (commutator(p, w) * (I * pre * Fraction(1, 2)) + w * w * (pre * pre * Fraction(1, 2))
                + self.ground_energy())

    def kinetic(self) -> OperatorPoly:
        p = OperatorPoly.momentum()
        return p * p * Fraction(1, 2)

    def hamiltonian(self) -> OperatorPoly:
        return self.kinetic() + self.potential()

    def reproduces_oscillator(self) -> bool:
        x = OperatorPoly.position()
        return self.potential() == x * x * Fraction(1, 2)


OSCILLATOR = SuperpotentialLinear()


def schrodinger_ops() -> Tuple[OperatorPoly, OperatorPoly]:
    """
    The lowering operator A0 = (p - i x)/sqrt2 of the oscillator and its adjoint; A0 = -i a.
    """
    lowering = OSCILLATOR.lowering_operator()
    return lowering, lowering.adjoint()


def oscillator_lowering_phase() -> FieldScalar:
    """ The phase c with A0 = c * a. """
    lowering, _ = schrodinger_ops()
    return lowering.coefficient(0, 1).as_constant()
