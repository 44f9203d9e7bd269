from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence, Tuple, Union

import numpy as np

from ladderwood.helpers.errors import InvalidArgument
from ladderwood.scalar.field import FieldScalar, ONE, ZERO, join_terms


Polylike = Union['ScalarPoly', FieldScalar, Rational, int]


@dataclass(frozen=True, init=False)
class ScalarPoly:
    """
    Univariate polynomial over Q(i, sqrt2) in the formal indeterminate xi.

    ``coefficients[k]`` multiplies ``xi**k``. Trailing zeros are trimmed on construction, so the zero
    polynomial has an empty coefficient tuple and equality is plain tuple equality.

    xi stands for the dimensionless position sqrt(m*w0/hbar)*x or the dimensionless momentum p/sqrt(m*hbar*w0);
    it is always real, so complex conjugation acts on the coefficients only.
    """
    coefficients: Tuple[FieldScalar, ...]

    def __init__(self, coefficients: Iterable = ()):
        coeffs = [FieldScalar.of(c) for c in coefficients]
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        object.__setattr__(self, 'coefficients', tuple(coeffs))

    # ------------------------- #
    # Constructors
    # ------------------------- #
    @staticmethod
    def of(value: Polylike) -> 'ScalarPoly':
        if isinstance(value, ScalarPoly):
            return value
        return ScalarPoly((FieldScalar.of(value),))

    @staticmethod
    def constant(value) -> 'ScalarPoly':
        return ScalarPoly((value,))

    @staticmethod
    def xi() -> 'ScalarPoly':
        return ScalarPoly((ZERO, ONE))

    @staticmethod
    def monomial(degree: int, coefficient=1) -> 'ScalarPoly':
        return ScalarPoly([ZERO] * degree + [FieldScalar.of(coefficient)])

    # ------------------------- #
    # Queries
    # ------------------------- #
    @property
    def degree(self) -> int:
        """ Degree of the polynomial; -1 for the zero polynomial. """
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def is_constant(self) -> bool:
        return len(self.coefficients) <= 1

    def constant_term(self) -> FieldScalar:
        return self.coefficients[0] if self.coefficients else ZERO

    def as_constant(self) -> FieldScalar:
        if not self.is_constant():
            raise InvalidArgument(f'{self} depends on xi')
        return self.constant_term()

    def coefficient(self, k: int) -> FieldScalar:
        return self.coefficients[k] if 0 <= k < len(self.coefficients) else ZERO

    # ------------------------- #
    # Ring operations
    # ------------------------- #
    def __add__(self, other: Polylike) -> 'ScalarPoly':
        try:
            o = ScalarPoly.of(other)
        except InvalidArgument:
            return NotImplemented
        size = max(len(self.coefficients), len(o.coefficients))
        return ScalarPoly(self.coefficient(k) + o.coefficient(k) for k in range(size))

    __radd__ = __add__

    def __neg__(self) -> 'ScalarPoly':
        return ScalarPoly(-c for c in self.coefficients)

    def __sub__(self, other: Polylike) -> 'ScalarPoly':
        try:
            o = ScalarPoly.of(other)
        except InvalidArgument:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Polylike) -> 'ScalarPoly':
        return ScalarPoly.of(other) - self

    def __mul__(self, other: Polylike) -> 'ScalarPoly':
        if isinstance(other, (FieldScalar, Rational)):
            return self.scale(other)
        if not isinstance(other, ScalarPoly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return ScalarPoly()
        out = [ZERO] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coefficients):
                out[i + j] = out[i + j] + a * b
        return ScalarPoly(out)

    __rmul__ = __mul__

    def scale(self, factor: Union[FieldScalar, Rational]) -> 'ScalarPoly':
        f = FieldScalar.of(factor)
        return ScalarPoly(c * f for c in self.coefficients)

    def __pow__(self, exponent: int) -> 'ScalarPoly':
        if exponent < 0:
            raise InvalidArgument('negative powers of a polynomial are not polynomials')
        result = ScalarPoly.of(1)
        for _ in range(exponent):
            result = result * self
        return result

    # ------------------------- #
    # Maps
    # ------------------------- #
    def conjugate(self) -> 'ScalarPoly':
        return ScalarPoly(c.conjugate() for c in self.coefficients)

    def sqrt2_conjugate(self) -> 'ScalarPoly':
        return ScalarPoly(c.sqrt2_conjugate() for c in self.coefficients)

    def reflect(self) -> 'ScalarPoly':
        """ Returns p(-xi). """
        return ScalarPoly(c if k % 2 == 0 else -c for k, c in enumerate(self.coefficients))

    def evaluate(self, point: Union[FieldScalar, Rational]) -> FieldScalar:
        """ Exact Horner evaluation at a field element. """
        x = FieldScalar.of(point)
        acc = ZERO
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def to_complex_array(self) -> np.ndarray:
        """ Ascending coefficients as complex doubles, ready for `numpy.polynomial.polynomial.polyval`. """
        return np.array([complex(c) for c in self.coefficients], dtype=complex)

    def evaluate_complex(self, points: Union[complex, Sequence[float], np.ndarray]) -> np.ndarray:
        if self.is_zero():
            return np.zeros_like(np.asarray(points, dtype=complex))
        return np.polynomial.polynomial.polyval(np.asarray(points, dtype=complex), self.to_complex_array())

    # ------------------------- #
    # Printing
    # ------------------------- #
    def term_strings(self):
        """ (sign, magnitude) pairs, highest degree first, in the syntax accepted by the expression parser. """
        terms = []
        for k in range(len(self.coefficients) - 1, -1, -1):
            c = self.coefficients[k]
            if c.is_zero():
                continue
            power = '' if k == 0 else ('xi' if k == 1 else f'xi^{k}')
            parts = c.term_strings()
            if len(parts) == 1:
                sign, body = parts[0]
                if not power:
                    terms.append((sign, body))
                elif body == '1':
                    terms.append((sign, power))
                else:
                    terms.append((sign, f'{body}*{power}'))
            else:
                if power:
                    terms.append(('+', f'({c})*{power}'))
                else:
                    terms.extend(parts)
        return terms

    def __str__(self) -> str:
        return join_terms(self.term_strings())

    def __repr__(self) -> str:
        return f'ScalarPoly({self})'


def poly_add(a: Polylike, b: Polylike) -> ScalarPoly:
    return ScalarPoly.of(a) + ScalarPoly.of(b)


def poly_mul(a: Polylike, b: Polylike) -> ScalarPoly:
    return ScalarPoly.of(a) * ScalarPoly.of(b)


def poly_scale(a: Polylike, factor: Union[FieldScalar, Rational]) -> ScalarPoly:
    return ScalarPoly.of(a).scale(factor)


XI = ScalarPoly.xi()
POLY_ZERO = ScalarPoly()
POLY_ONE = ScalarPoly.of(Fraction(1))
