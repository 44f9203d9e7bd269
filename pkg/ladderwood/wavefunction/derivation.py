from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import List, Tuple, Union

from ladderwood.algebra.operator import OperatorPoly
from ladderwood.api.types import WavefunctionRecord
from ladderwood.exponential.affine import AffineForm, hadamard_conjugate
from ladderwood.exponential.group import GroupElement, bch_compose
from ladderwood.helpers.errors import InvalidArgument, VerificationFailure
from ladderwood.helpers.log import log
from ladderwood.scalar.field import FieldScalar, I, ONE
from ladderwood.scalar.pi_power import PiPower
from ladderwood.scalar.poly import ScalarPoly, XI
from ladderwood.scalar.units import UnitSystem
from ladderwood.wavefunction.bra import EigenBra, Space


GROUND_NORM = PiPower(ONE, Fraction(-1, 4))


@dataclass(frozen=True)
class ClosedFormWavefunction:
    """
    ``sqrt(scale_sq) * poly(xi) * exp(-gaussian_rate * xi^2) * norm``

    For derived eigenstates ``poly`` is the Hermite polynomial H_n with integer coefficients and ``scale_sq`` is the
    rational 1/(2^n n!), so the irrational prefactor is carried as its exact square. ``phase`` is the global phase
    that enters the definition of the wavefunction (i^n in momentum space); it is recorded, never multiplied in.

    :param space: position or momentum; xi is the dimensionless coordinate of that space.
    :param n: occupation number of the state.
    :param poly: polynomial part in xi.
    :param scale_sq: square of the rational-free normalization prefactor.
    :param gaussian_rate: g in exp(-g xi^2).
    :param norm: <x=0|0> (or <p=0|0>) as a symbolic power of pi.
    :param phase: unit-modulus global phase.
    """
    space: Space
    n: int
    poly: ScalarPoly
    scale_sq: Fraction = Fraction(1)
    gaussian_rate: Fraction = Fraction(1, 2)
    norm: PiPower = GROUND_NORM
    phase: FieldScalar = ONE

    def has_parity(self) -> bool:
        """ poly(-xi) = (-1)^n poly(xi). """
        reflected = self.poly.reflect()
        return reflected == (self.poly if self.n % 2 == 0 else -self.poly)

    def integer_coefficients(self) -> List[int]:
        out = []
        for c in self.poly.coefficients:
            q = c.as_rational()
            if q.denominator != 1:
                raise InvalidArgument(f'{self.poly} does not have integer coefficients')
            out.append(int(q))
        return out

    def to_record(self) -> WavefunctionRecord:
        return WavefunctionRecord(
            space=self.space.value,
            n=self.n,
            coeffs=[str(c) for c in self.poly.coefficients],
            scale_sq=str(self.scale_sq),
            gaussian_rate=str(self.gaussian_rate),
            norm_pi_exponent=str(self.norm.exponent),
            norm_coefficient=str(self.norm.coefficient),
            phase=str(self.phase),
        )

    def label(self) -> str:
        return f'psi_{self.n}(x)' if self.space == Space.position else f'phi_{self.n}(p)'

    def render(self, units: UnitSystem = UnitSystem()) -> str:
        space = self.space.value
        argument = units.argument(space)
        poly = str(self.poly) if units.is_natural else str(self.poly).replace('xi', f'({argument})')
        parts = []
        if self.scale_sq != 1:
            parts.append(f'sqrt({self.scale_sq})')
        parts.append(f'({poly})')
        parts.append(units.gaussian(space, self.gaussian_rate))
        if self.norm.coefficient != 1:
            parts.append(f'({self.norm.coefficient})')
        parts.append(units.pi_power(space, self.norm.exponent))
        return f'{self.label()} = ' + ' * '.join(parts)

    def __str__(self) -> str:
        return self.render()


def render_wavefunction(f: ClosedFormWavefunction, units: Union[UnitSystem, str] = UnitSystem()) -> str:
    if isinstance(units, str):
        units = UnitSystem.from_name(units)
    return f.render(units)


@dataclass(frozen=True)
class DerivationStep:
    name: str
    log_prefactor: ScalarPoly
    expression: str


@dataclass
class DerivationTrace:
    """ Every intermediate of the algebraic pipeline, in order. """
    space: Space
    n: int
    steps: List[DerivationStep] = field(default_factory=list)

    def record(self, name: str, log_prefactor: ScalarPoly, expression) -> None:
        step = DerivationStep(name, log_prefactor, str(expression))
        self.steps.append(step)
        log.debug(f'[{self.space.value} n={self.n}] {name}: exp({log_prefactor}) * {step.expression}')

    def names(self) -> List[str]:
        return [s.name for s in self.steps]

    def __str__(self) -> str:
        return '\n'.join(f'{s.name}: exp({s.log_prefactor}) * {s.expression}' for s in self.steps)


def _shift_exponent(space: Space) -> AffineForm:
    """ i xi p for position space, -i xi x for momentum space, both in ladder form. """
    if space == Space.position:
        return AffineForm.from_operator(OperatorPoly.momentum() * (XI * I))
    return AffineForm.from_operator(OperatorPoly.position() * (XI * -I))


def _derive(n: int, space: Space) -> Tuple[ClosedFormWavefunction, DerivationTrace]:
    if n < 0:
        raise InvalidArgument(f'Wavefunctions are labelled by nonnegative integers, got {n}')
    trace = DerivationTrace(space, n)
    bra = EigenBra(space)
    creation_power = OperatorPoly.word(n, 0)

    # <bra| e^F ad^n |0>
    exponent = _shift_exponent(space)
    trace.record('ladder substitution', ScalarPoly(), GroupElement.of(exponent))

    # e^F = e^P e^(alpha ad) e^(beta a)
    split = GroupElement.of(exponent).normal_split()
    trace.record('normal split', split.log_prefactor, split)

    # e^(beta a) ad^n = (ad + beta)^n e^(beta a)
    annihilation = split.annihilation_form()
    shifted = hadamard_conjugate(annihilation, creation_power)
    trace.record('braid through power', split.log_prefactor, shifted)

    # e^(beta a)|0> = |0>
    trace.record('annihilate on vacuum', split.log_prefactor, f'exp({split.creation_form()}) * ({shifted})')

    # |0> = e^(-beta a)|0>, then (ad + beta)^n e^(-beta a) = e^(-beta a) (ad + 2 beta)^n
    inserted = annihilation.negate()
    shifted = hadamard_conjugate(annihilation, shifted)
    trace.record('insert unit exponential and braid back', split.log_prefactor,
                 f'exp({split.creation_form()}) * exp({inserted}) * ({shifted})')

    # e^(alpha ad) e^(-beta a) = e^(alpha ad - beta a + [., .]/2)
    recombined = bch_compose(split.creation_form(), inserted)
    log_prefactor = split.log_prefactor + recombined.log_prefactor
    trace.record('recombine', log_prefactor, f'{GroupElement(recombined.exponent)} * ({shifted})')

    if not bra.kills(recombined.exponent):
        log.error(f'Recombined exponent {recombined.exponent} is not proportional to the {space.value} operator')
        raise VerificationFailure('The eigenbra does not absorb the recombined exponential')
    trace.record('absorb exponential into eigenbra', log_prefactor, shifted)

    element = bra.vacuum_element(shifted)
    trace.record('reduce vacuum element', log_prefactor, element)

    rate = -log_prefactor.coefficient(2)
    if log_prefactor != ScalarPoly.monomial(2, -rate) or not rate.is_rational():
        log.error(f'Unexpected Gaussian prefactor exp({log_prefactor})')
        raise VerificationFailure('The accumulated prefactor is not a real Gaussian in xi')

    phase = I ** n if space == Space.momentum else ONE
    hermite = element.scale(FieldScalar.sqrt2_power(n) * phase)
    trace.record('hermite polynomial', log_prefactor, hermite)

    wavefunction = ClosedFormWavefunction(
        space=space,
        n=n,
        poly=hermite,
        scale_sq=Fraction(1, 2 ** n * factorial(n)),
        gaussian_rate=rate.as_rational(),
        norm=GROUND_NORM,
        phase=phase,
    )
    return wavefunction, trace


def derive_wavefunction(n: int, space: Union[str, Space] = Space.position) -> ClosedFormWavefunction:
    return _derive(n, Space.from_name(space))[0]


def derive_with_trace(n: int, space: Union[str, Space] = Space.position) -> Tuple[ClosedFormWavefunction,
                                                                                   DerivationTrace]:
    return _derive(n, Space.from_name(space))


def derive_position_wavefunction(n: int) -> ClosedFormWavefunction:
    """ psi_n(x) = <x=0| e^(i x p) ad^n |0> / sqrt(n!), evaluated without derivatives. """
    return derive_wavefunction(n, Space.position)


def derive_momentum_wavefunction(n: int) -> ClosedFormWavefunction:
    """ phi_n(p) = i^n <p=0| e^(-i p x) ad^n |0> / sqrt(n!). """
    return derive_wavefunction(n, Space.momentum)


def isomorphic(n: int) -> bool:
    """ Position and momentum eigenfunctions share the same polynomial part. """
    return derive_position_wavefunction(n).poly == derive_momentum_wavefunction(n).poly
