from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Tuple, Union

from ladderwood.helpers.errors import DivisionByZero, InvalidArgument
from ladderwood.helpers.log import log


Scalarlike = Union['FieldScalar', Rational, int]


def join_terms(terms) -> str:
    """ Joins (sign, magnitude) pairs so that the result parses back with the expression grammar. """
    if not terms:
        return '0'
    out = ''
    for idx, (sign, body) in enumerate(terms):
        if idx == 0:
            if sign == '-':
                out = f'-{body}' if body[0].isdigit() else f'-1*{body}'
            else:
                out = body
        else:
            out += f' {sign} {body}'
    return out


def _render_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f'{q.numerator}/{q.denominator}'


@dataclass(frozen=True)
class FieldScalar:
    """
    Exact element of the number field Q(i, sqrt2).

    The value is ``q0 + q1*i + q2*sqrt2 + q3*i*sqrt2``. Components are ``fractions.Fraction`` so they are always
    kept in lowest terms with a positive denominator.

    :param q0: rational part.
    :param q1: coefficient of i.
    :param q2: coefficient of sqrt2.
    :param q3: coefficient of i*sqrt2.
    """
    q0: Fraction = Fraction(0)
    q1: Fraction = Fraction(0)
    q2: Fraction = Fraction(0)
    q3: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ('q0', 'q1', 'q2', 'q3'):
            value = getattr(self, name)
            if not isinstance(value, Fraction):
                if not isinstance(value, Rational):
                    raise InvalidArgument(f'FieldScalar components must be rational, got {value!r}')
                object.__setattr__(self, name, Fraction(value))

    # ------------------------- #
    # Constructors
    # ------------------------- #
    @staticmethod
    def of(value: Scalarlike) -> 'FieldScalar':
        """ Promotes ints, Fractions and FieldScalars to a FieldScalar. """
        if isinstance(value, FieldScalar):
            return value
        if isinstance(value, Rational):
            return FieldScalar(Fraction(value))
        raise InvalidArgument(f'Cannot promote {value!r} to an element of Q(i, sqrt2)')

    @staticmethod
    def zero() -> 'FieldScalar':
        return ZERO

    @staticmethod
    def one() -> 'FieldScalar':
        return ONE

    @staticmethod
    def i() -> 'FieldScalar':
        return I

    @staticmethod
    def sqrt2() -> 'FieldScalar':
        return SQRT2

    @staticmethod
    def sqrt2_power(k: int) -> 'FieldScalar':
        """ Returns sqrt2**k for any integer k. """
        half, odd = divmod(k, 2)
        base = Fraction(2) ** half
        return FieldScalar(q2=base) if odd else FieldScalar(base)

    @property
    def components(self) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
        return self.q0, self.q1, self.q2, self.q3

    # ------------------------- #
    # Predicates
    # ------------------------- #
    def is_zero(self) -> bool:
        return not (self.q0 or self.q1 or self.q2 or self.q3)

    def is_rational(self) -> bool:
        return not (self.q1 or self.q2 or self.q3)

    def is_real(self) -> bool:
        return not (self.q1 or self.q3)

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise InvalidArgument(f'{self} is not rational')
        return self.q0

    # ------------------------- #
    # Field operations
    # ------------------------- #
    def __add__(self, other: Scalarlike) -> 'FieldScalar':
        try:
            o = FieldScalar.of(other)
        except InvalidArgument:
            return NotImplemented
        return FieldScalar(self.q0 + o.q0, self.q1 + o.q1, self.q2 + o.q2, self.q3 + o.q3)

    __radd__ = __add__

    def __neg__(self) -> 'FieldScalar':
        return FieldScalar(-self.q0, -self.q1, -self.q2, -self.q3)

    def __sub__(self, other: Scalarlike) -> 'FieldScalar':
        try:
            o = FieldScalar.of(other)
        except InvalidArgument:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Scalarlike) -> 'FieldScalar':
        return FieldScalar.of(other) - self

    def __mul__(self, other: Scalarlike) -> 'FieldScalar':
        try:
            o = FieldScalar.of(other)
        except InvalidArgument:
            return NotImplemented
        a, b, c, d = self.components
        e, f, g, h = o.components
        # basis products: i*i = -1, sqrt2*sqrt2 = 2, i*sqrt2 * i*sqrt2 = -2
        return FieldScalar(
            a * e - b * f + 2 * c * g - 2 * d * h,
            a * f + b * e + 2 * c * h + 2 * d * g,
            a * g + c * e - b * h - d * f,
            a * h + d * e + b * g + c * f,
        )

    __rmul__ = __mul__

    def inverse(self) -> 'FieldScalar':
        """
        Multiplicative inverse through the norm down to Q: writing x = u + v*sqrt2 with u, v in Q(i),
        x * (u - v*sqrt2) = w lies in Q(i), and w * conj(w) is the rational degree-4 norm.
        """
        if self.is_zero():
            log.error('Attempted to invert zero in Q(i, sqrt2)')
            raise DivisionByZero('inversion of zero')
        sqrt2_conj = self.sqrt2_conjugate()
        w = self * sqrt2_conj
        norm = (w * w.conjugate()).as_rational()
        return sqrt2_conj * w.conjugate() * FieldScalar(1 / norm)

    def __truediv__(self, other: Scalarlike) -> 'FieldScalar':
        try:
            o = FieldScalar.of(other)
        except InvalidArgument:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: Scalarlike) -> 'FieldScalar':
        return FieldScalar.of(other) * self.inverse()

    def __pow__(self, exponent: int) -> 'FieldScalar':
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result, base = ONE, self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # ------------------------- #
    # Automorphisms
    # ------------------------- #
    def conjugate(self) -> 'FieldScalar':
        """ Complex conjugation, i -> -i. """
        return FieldScalar(self.q0, -self.q1, self.q2, -self.q3)

    def sqrt2_conjugate(self) -> 'FieldScalar':
        """ The Galois automorphism sqrt2 -> -sqrt2. """
        return FieldScalar(self.q0, self.q1, -self.q2, -self.q3)

    def abs_squared(self) -> 'FieldScalar':
        return self * self.conjugate()

    # ------------------------- #
    # Comparison and conversion
    # ------------------------- #
    def __eq__(self, other) -> bool:
        if isinstance(other, FieldScalar):
            return self.components == other.components
        if isinstance(other, Rational):
            return self.is_rational() and self.q0 == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(self.q0)
        return hash(self.components)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __complex__(self) -> complex:
        root2 = 2 ** 0.5
        return complex(float(self.q0) + float(self.q2) * root2, float(self.q1) + float(self.q3) * root2)

    def __float__(self) -> float:
        if not self.is_real():
            raise InvalidArgument(f'{self} is not real')
        return complex(self).real

    def sign(self) -> int:
        """ Sign of a real element, decided exactly: compare q0 against -q2*sqrt2 by squaring. """
        if not self.is_real():
            raise InvalidArgument(f'{self} is not real')
        a, c = self.q0, self.q2
        if a >= 0 and c >= 0:
            return 0 if a == 0 and c == 0 else 1
        if a <= 0 and c <= 0:
            return -1
        # opposite signs: the larger of a^2 and 2c^2 wins
        if a * a == 2 * c * c:
            return 0
        dominant = a if a * a > 2 * c * c else c
        return 1 if dominant > 0 else -1

    def term_strings(self):
        """ (sign, magnitude) pairs of the canonical text form, one per nonzero component. """
        terms = []
        for value, unit in zip(self.components, ('', 'i', 'sqrt2', 'i*sqrt2')):
            if not value:
                continue
            sign = '-' if value < 0 else '+'
            magnitude = abs(value)
            if not unit:
                body = _render_rational(magnitude)
            elif magnitude == 1:
                body = unit
            else:
                body = f'{_render_rational(magnitude)}*{unit}'
            terms.append((sign, body))
        return terms

    def __str__(self) -> str:
        return join_terms(self.term_strings())

    def __repr__(self) -> str:
        return f'FieldScalar({self})'


ZERO = FieldScalar()
ONE = FieldScalar(Fraction(1))
I = FieldScalar(q1=Fraction(1))  # noqa
SQRT2 = FieldScalar(q2=Fraction(1))
INV_SQRT2 = FieldScalar(q2=Fraction(1, 2))


def field_add(a: Scalarlike, b: Scalarlike) -> FieldScalar:
    return FieldScalar.of(a) + FieldScalar.of(b)


def field_mul(a: Scalarlike, b: Scalarlike) -> FieldScalar:
    return FieldScalar.of(a) * FieldScalar.of(b)


def field_neg(a: Scalarlike) -> FieldScalar:
    return -FieldScalar.of(a)


def field_inv(a: Scalarlike) -> FieldScalar:
    return FieldScalar.of(a).inverse()
