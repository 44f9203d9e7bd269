from fractions import Fraction
from typing import List, Sequence, Union

import numpy as np

from ladderwood.helpers.errors import InvalidArgument, SpaceMismatch
from ladderwood.helpers.log import log
from ladderwood.scalar.field import FieldScalar, ZERO
from ladderwood.scalar.pi_power import gaussian_moment
from ladderwood.scalar.radical import RadicalScalar, sqrt_rational
from ladderwood.wavefunction.derivation import ClosedFormWavefunction


def inner_product(f: ClosedFormWavefunction, g: ClosedFormWavefunction) -> RadicalScalar:
    """
    Exact overlap of two closed forms: expand conj(poly_f) * poly_g, integrate every even power against
    exp(-xi^2) with `gaussian_moment`, and collect the powers of pi, which must cancel.

    Both Gaussian rates have to add up to 1 and both normalizations to pi^(-1/2); derived eigenstates always do.
    """
    if f.space != g.space:
        log.error(f'Cannot take the overlap of a {f.space.value} and a {g.space.value} wavefunction')
        raise SpaceMismatch(f'{f.space.value} vs {g.space.value}')
    if f.gaussian_rate + g.gaussian_rate != 1:
        raise InvalidArgument(f'Gaussian rates {f.gaussian_rate} and {g.gaussian_rate} do not add up to 1')
    norm = f.norm * g.norm
    if norm.exponent != Fraction(-1, 2):
        raise InvalidArgument(f'Normalizations leave pi^({norm.exponent + Fraction(1, 2)}) in the overlap')

    product = f.poly.conjugate() * g.poly
    total = ZERO
    for k, c in enumerate(product.coefficients):
        if k % 2 or c.is_zero():
            continue
        moment = gaussian_moment(k // 2) * norm
        total = total + c * moment.coefficient
    root = sqrt_rational(f.scale_sq * g.scale_sq)
    return RadicalScalar(root.coefficient * total, root.radicand)


def evaluate(f: ClosedFormWavefunction, points: Union[float, Sequence[float], np.ndarray]) -> np.ndarray:
    """ Numeric values sqrt(scale_sq) * poly(xi) * exp(-g xi^2) * norm at the given points. """
    xi = np.asarray(points, dtype=float)
    values = f.poly.evaluate_complex(xi).real
    prefactor = float(f.scale_sq) ** 0.5 * float(f.norm)
    return prefactor * values * np.exp(-float(f.gaussian_rate) * xi ** 2)


def overlap_matrix(states: Sequence[ClosedFormWavefunction]) -> List[List[RadicalScalar]]:
    """ All pairwise overlaps, row index the bra. """
    return [[inner_product(f, g) for g in states] for f in states]


def is_orthonormal(states: Sequence[ClosedFormWavefunction]) -> bool:
    for i, row in enumerate(overlap_matrix(states)):
        for j, value in enumerate(row):
            expected = FieldScalar.one() if i == j else ZERO
            if value != expected:
                log.error(f'<{states[i].label()}|{states[j].label()}> = {value}, expected {expected}')
                return False
    return True
