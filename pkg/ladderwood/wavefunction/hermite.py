from dataclasses import dataclass
from typing import List, Tuple

import numpy as np

from ladderwood.algebra.operator import OperatorPoly, commutator
from ladderwood.helpers.errors import InvalidArgument, VerificationFailure
from ladderwood.helpers.log import log
from ladderwood.scalar.field import FieldScalar, SQRT2, join_terms
from ladderwood.scalar.poly import ScalarPoly, XI


@dataclass(frozen=True)
class HermitePolynomial:
    """
    Physicists' Hermite polynomial H_n with integer coefficients, ascending in the scaled variable z.
    """
    n: int
    coefficients: Tuple[int, ...]

    @property
    def leading(self) -> int:
        return self.coefficients[-1]

    def to_poly(self) -> ScalarPoly:
        return ScalarPoly(self.coefficients)

    def has_parity(self) -> bool:
        return all(c == 0 for k, c in enumerate(self.coefficients) if (k - self.n) % 2)

    def __call__(self, z):
        return np.polynomial.polynomial.polyval(np.asarray(z, dtype=float), np.array(self.coefficients, dtype=float))

    def __str__(self) -> str:
        terms = []
        for k in range(len(self.coefficients) - 1, -1, -1):
            c = self.coefficients[k]
            if c == 0:
                continue
            power = '' if k == 0 else ('z' if k == 1 else f'z^{k}')
            magnitude = abs(c)
            body = str(magnitude) if not power else (power if magnitude == 1 else f'{magnitude}*{power}')
            terms.append(('-' if c < 0 else '+', body))
        return join_terms(terms)


def hermite_recurrence(n: int) -> HermitePolynomial:
    """ H_0 = 1, H_1 = 2z, H_n = 2z H_(n-1) - 2(n-1) H_(n-2). """
    if n < 0:
        raise InvalidArgument(f'Hermite index must be nonnegative, got {n}')
    previous: List[int] = []
    current: List[int] = [1]
    for k in range(1, n + 1):
        shifted = [0] + [2 * c for c in current]
        for idx, c in enumerate(previous):
            shifted[idx] -= 2 * (k - 1) * c
        previous, current = current, shifted
    return HermitePolynomial(n, tuple(current))


def _integer_coefficients(poly: ScalarPoly, n: int) -> Tuple[int, ...]:
    coefficients = []
    for c in poly.coefficients:
        q = c.as_rational()
        if q.denominator != 1:
            raise VerificationFailure(f'H_{n} reduction produced the non-integer coefficient {q}')
        coefficients.append(int(q))
    return tuple(coefficients)


def hermite_reduction(n: int) -> HermitePolynomial:
    """
    H_n from the matrix element <x=0|S^n|0> / <x=0|0> with S = ad + sqrt2*xi, by peeling one factor of S at a time.

    On the position eigenbra ad = sqrt2*x - a acts as -a, and a S^(n-1)|0> = [a, S^(n-1)]|0> = k S^(n-2)|0>, so
        M_n = sqrt2*xi * M_(n-1) - k * M_(n-2),     M_0 = 1, M_1 = sqrt2*xi,
    where k is read off the normal-ordered commutator. Finally H_n = sqrt2^n * M_n.
    """
    if n < 0:
        raise InvalidArgument(f'Hermite index must be nonnegative, got {n}')
    shift = XI * SQRT2
    s = OperatorPoly.creation() + shift
    a = OperatorPoly.annihilation()

    elements: List[ScalarPoly] = [ScalarPoly.of(1), shift]
    powers: List[OperatorPoly] = [OperatorPoly.identity(), s]
    for m in range(2, n + 1):
        powers.append(powers[-1] * s)
        bracket = commutator(a, powers[m - 1])
        k = bracket.coefficient(m - 2, 0)
        if bracket != powers[m - 2] * k:
            log.error(f'[a, S^{m - 1}] = {bracket} is not proportional to S^{m - 2}')
            raise VerificationFailure(f'Reduction step {m} did not close')
        elements.append(shift * elements[m - 1] - k * elements[m - 2])

    scaled = elements[n].scale(FieldScalar.sqrt2_power(n))
    return HermitePolynomial(n, _integer_coefficients(scaled, n))
