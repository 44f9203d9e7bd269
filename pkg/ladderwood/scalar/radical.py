from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Tuple, Union

from sympy import factorint

from ladderwood.helpers.errors import InvalidArgument
from ladderwood.scalar.field import FieldScalar, join_terms


def squarefree_split(n: int) -> Tuple[int, int]:
    """ Writes a positive integer as root**2 * rest with `rest` square-free. """
    root, rest = 1, 1
    for prime, multiplicity in factorint(n).items():
        root *= prime ** (multiplicity // 2)
        if multiplicity % 2:
            rest *= prime
    return root, rest


def sqrt_rational(q: Union[Rational, int]) -> 'RadicalScalar':
    """
    Exact square root of a nonnegative rational as ``coefficient * sqrt(radicand)``.

    sqrt(p/q) = sqrt(p*q)/q; square factors move into the coefficient and a leftover factor 2 becomes the
    sqrt2 component of the coefficient, so the radicand ends up square-free and odd.
    """
    q = Fraction(q)
    if q < 0:
        raise InvalidArgument(f'square root of negative rational {q}')
    if q == 0:
        return RadicalScalar(FieldScalar(), 1)
    root, rest = squarefree_split(q.numerator * q.denominator)
    coefficient = FieldScalar(Fraction(root, q.denominator))
    if rest % 2 == 0:
        rest //= 2
        coefficient = coefficient * FieldScalar.sqrt2()
    return RadicalScalar(coefficient, rest)


@dataclass(frozen=True)
class RadicalScalar:
    """
    ``coefficient * sqrt(radicand)`` with a field coefficient and a square-free odd radicand.

    Normalized Fock matrix elements such as <3|ad|2> = sqrt(3) leave Q(i, sqrt2); square roots of distinct
    square-free odd integers are linearly independent over the field, so this form is canonical.
    """
    coefficient: FieldScalar
    radicand: int = 1

    def __post_init__(self):
        object.__setattr__(self, 'coefficient', FieldScalar.of(self.coefficient))
        if self.coefficient.is_zero():
            object.__setattr__(self, 'radicand', 1)
        elif self.radicand < 1 or self.radicand % 2 == 0:
            raise InvalidArgument(f'radicand must be odd and positive, got {self.radicand}')

    @staticmethod
    def of(value: Union['RadicalScalar', FieldScalar, Rational]) -> 'RadicalScalar':
        if isinstance(value, RadicalScalar):
            return value
        return RadicalScalar(FieldScalar.of(value), 1)

    def is_zero(self) -> bool:
        return self.coefficient.is_zero()

    def in_field(self) -> bool:
        return self.radicand == 1

    def __mul__(self, other) -> 'RadicalScalar':
        o = RadicalScalar.of(other)
        product = sqrt_rational(self.radicand * o.radicand)
        return RadicalScalar(self.coefficient * o.coefficient * product.coefficient, product.radicand)

    __rmul__ = __mul__

    def __neg__(self) -> 'RadicalScalar':
        return RadicalScalar(-self.coefficient, self.radicand)

    def conjugate(self) -> 'RadicalScalar':
        return RadicalScalar(self.coefficient.conjugate(), self.radicand)

    def __eq__(self, other) -> bool:
        if isinstance(other, (FieldScalar, Rational)):
            other = RadicalScalar.of(other)
        if not isinstance(other, RadicalScalar):
            return NotImplemented
        return self.coefficient == other.coefficient and self.radicand == other.radicand

    def __hash__(self) -> int:
        if self.radicand == 1:
            return hash(self.coefficient)
        return hash((self.coefficient, self.radicand))

    def __complex__(self) -> complex:
        return complex(self.coefficient) * self.radicand ** 0.5

    def __str__(self) -> str:
        if self.in_field():
            return str(self.coefficient)
        terms = self.coefficient.term_strings()
        if len(terms) == 1 and terms[0][1] == '1':
            return join_terms([(terms[0][0], f'sqrt({self.radicand})')])
        if len(terms) == 1:
            return join_terms([(terms[0][0], f'{terms[0][1]}*sqrt({self.radicand})')])
        return f'({self.coefficient})*sqrt({self.radicand})'
