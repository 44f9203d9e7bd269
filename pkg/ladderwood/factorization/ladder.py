from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from ladderwood.algebra.ket import FockKetExpansion
from ladderwood.algebra.operator import OperatorPoly
from ladderwood.factorization.superpotential import SuperpotentialLinear, OSCILLATOR
from ladderwood.helpers.errors import InvalidArgument, VerificationFailure
from ladderwood.helpers.log import log
from ladderwood.scalar.field import FieldScalar, I


@dataclass(frozen=True)
class FactorizationLadder:
    """
    The chain of auxiliary Hamiltonians H_j = A_j^dag A_j + E_j, with H_(j+1) = A_j A_j^dag + E_j.

    ``hamiltonians`` holds one more entry than ``energies`` so that the intertwining relation can be checked
    at every rung j < depth.
    """
    lowering_ops: Tuple[OperatorPoly, ...]
    energies: Tuple[Fraction, ...]
    hamiltonians: Tuple[OperatorPoly, ...]

    @property
    def depth(self) -> int:
        return len(self.energies)

    def raising_op(self, j: int) -> OperatorPoly:
        return self.lowering_ops[j].adjoint()

    def _check_rung(self, j: int):
        if not 0 <= j < self.depth:
            raise InvalidArgument(f'Rung {j} is outside a ladder of depth {self.depth}')


def build_ladder(depth: int, superpotential: SuperpotentialLinear = OSCILLATOR) -> FactorizationLadder:
    """
    Builds the first ``depth`` rungs. For the oscillator every auxiliary Hamiltonian factorizes with the same
    lowering operator, so E_(j+1) is read off as the scalar H_(j+1) - A0^dag A0; a non-scalar remainder means the
    chain does not close.
    """
    if depth < 1:
        raise InvalidArgument(f'Ladder depth must be positive, got {depth}')
    lowering = superpotential.lowering_operator()
    raising = lowering.adjoint()
    base = raising * lowering

    energies: List[Fraction] = [superpotential.ground_energy()]
    hamiltonians: List[OperatorPoly] = [base + energies[0]]
    for j in range(depth):
        shifted = lowering * raising + energies[j]
        hamiltonians.append(shifted)
        if j + 1 == depth:
            break
        remainder = shifted - base
        if not remainder.is_scalar() or not remainder.is_xi_free():
            log.error(f'H_{j + 1} - A^dag A = {remainder} is not a constant')
            raise VerificationFailure(f'Auxiliary Hamiltonian {j + 1} does not refactorize')
        energies.append(remainder.as_scalar().as_constant().as_rational())
        log.debug(f'E_{j + 1} = {energies[-1]}')

    return FactorizationLadder(tuple([lowering] * depth), tuple(energies), tuple(hamiltonians))


def spectrum(nmax: int) -> List[Fraction]:
    """ E_0 ... E_nmax. """
    return list(build_ladder(nmax + 1).energies)


def check_intertwining(ladder: FactorizationLadder, j: int) -> OperatorPoly:
    """ Residual H_(j+1) A_j - A_j H_j; zero at every rung. """
    ladder._check_rung(j)
    a_j = ladder.lowering_ops[j]
    return ladder.hamiltonians[j + 1] * a_j - a_j * ladder.hamiltonians[j]


def check_adjoint_intertwining(ladder: FactorizationLadder, j: int) -> OperatorPoly:
    """ Residual A_j^dag H_(j+1) - H_j A_j^dag. """
    ladder._check_rung(j)
    raising = ladder.raising_op(j)
    return raising * ladder.hamiltonians[j + 1] - ladder.hamiltonians[j] * raising


def raising_intertwining_residual() -> OperatorPoly:
    """ H ad - ad (H + 1). """
    h, ad = OperatorPoly.hamiltonian(), OperatorPoly.creation()
    return h * ad - ad * (h + 1)


def norm_product(energy, j: int, ladder: FactorizationLadder = None) -> Fraction:
    """
    prod_(k=0..j) (E - E_k), the squared norm of A_j ... A_0 |phi> for an eigenstate |phi> of energy E.

    When E is on the spectrum the same number is recomputed by acting with the operator string on the
    corresponding eigenstate, and the two must agree exactly.
    """
    energy = Fraction(energy)
    if j < 0:
        raise InvalidArgument(f'Rung index must be nonnegative, got {j}')
    ladder = ladder if ladder is not None and ladder.depth > j else build_ladder(j + 1)

    product = Fraction(1)
    for e_k in ladder.energies[:j + 1]:
        product *= energy - e_k

    level = energy - ladder.energies[0]
    if level.denominator == 1 and level >= 0:
        state = eigenstate(int(level))
        for k in range(j + 1):
            state = state.apply(ladder.lowering_ops[k])
        from_operators = state.norm_squared()
        if from_operators != product:
            log.error(f'Norm product {product} disagrees with the operator string value {from_operators}')
            raise VerificationFailure(f'norm_product({energy}, {j}) failed its cross-check')
    return product


def eigenstate(n: int) -> FockKetExpansion:
    """
    Builds |n> from the ground state as A0^dag ... A0^dag |0>, strips the i^n phase coming from A0^dag = i*ad,
    and normalizes.
    """
    if n < 0:
        raise InvalidArgument(f'Eigenstates are labelled by nonnegative integers, got {n}')
    raising = OSCILLATOR.raising_operator()
    state = FockKetExpansion.vacuum()
    for _ in range(n):
        state = state.apply(raising)
    state = state * ((-I) ** n)
    return state.normalized()


def positivity_witness(state: FockKetExpansion) -> FieldScalar:
    """ ||a psi||^2, checked against <psi|ad a|psi>; never negative. """
    lowered = state.apply(OperatorPoly.annihilation()).norm_squared()
    expectation = state.inner(state.apply(OperatorPoly.number()))
    if expectation != lowered or (not lowered.is_zero() and lowered.sign() < 0):
        log.error(f'Positivity check failed: ||a psi||^2 = {lowered}, <psi|N|psi> = {expectation}')
        raise VerificationFailure('||a psi||^2 must equal <psi|N|psi> and be nonnegative')
    return lowered
