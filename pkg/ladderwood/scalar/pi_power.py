import math
from dataclasses import dataclass
from fractions import Fraction

from ladderwood.helpers.errors import InvalidArgument
from ladderwood.scalar.field import FieldScalar


@dataclass(frozen=True)
class PiPower:
    """
    A field coefficient times a quarter-integer power of pi, ``coefficient * pi**exponent``.

    pi is never turned into a float inside exact computations, so normalization constants such as
    ``pi**(-1/4)`` and Gaussian moments such as ``sqrt(pi)/2`` combine exactly.
    """
    coefficient: FieldScalar = FieldScalar(Fraction(1))
    exponent: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, 'coefficient', FieldScalar.of(self.coefficient))
        exponent = Fraction(self.exponent)
        if (exponent * 4).denominator != 1:
            raise InvalidArgument(f'pi exponent must be a multiple of 1/4, got {exponent}')
        object.__setattr__(self, 'exponent', exponent)

    def __mul__(self, other: 'PiPower') -> 'PiPower':
        if not isinstance(other, PiPower):
            return PiPower(self.coefficient * FieldScalar.of(other), self.exponent)
        return PiPower(self.coefficient * other.coefficient, self.exponent + other.exponent)

    __rmul__ = __mul__

    def is_pure(self) -> bool:
        """ True when no power of pi is left. """
        return self.exponent == 0 or self.coefficient.is_zero()

    def __complex__(self) -> complex:
        return complex(self.coefficient) * math.pi ** float(self.exponent)

    def __float__(self) -> float:
        return float(self.coefficient) * math.pi ** float(self.exponent)

    def __str__(self) -> str:
        if self.exponent == 0:
            return str(self.coefficient)
        power = 'pi' if self.exponent == 1 else f'pi^({self.exponent})'
        if self.coefficient == 1:
            return power
        return f'({self.coefficient})*{power}'


def double_factorial(n: int) -> int:
    """ n!! with the conventions (-1)!! = 0!! = 1. """
    result = 1
    while n > 1:
        result *= n
        n -= 2
    return result


def gaussian_moment(k: int) -> PiPower:
    """
    Exact value of the integral of xi^(2k) * exp(-xi^2) over the real line: sqrt(pi) * (2k-1)!! / 2^k.
    Odd moments vanish and are handled by the caller.
    """
    if k < 0:
        raise InvalidArgument(f'moment index must be nonnegative, got {k}')
    return PiPower(FieldScalar(Fraction(double_factorial(2 * k - 1), 2 ** k)), Fraction(1, 2))
