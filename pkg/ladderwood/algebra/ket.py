from fractions import Fraction
from math import factorial
from numbers import Rational
from typing import Dict, Mapping, Union

from ladderwood.algebra.operator import OperatorPoly
from ladderwood.helpers.errors import InvalidArgument, UnboundIndeterminate
from ladderwood.helpers.log import log
from ladderwood.scalar.field import FieldScalar, ZERO
from ladderwood.scalar.radical import RadicalScalar, sqrt_rational


class FockKetExpansion:
    """
    Finite state ``sqrt(scale_sq) * sum_n c_n * ad**n |0>``.

    Amplitudes are stored against the unnormalized vectors ad**n|0> (whose squared norm is the rational n!), so the
    irrational sqrt(n!) of the normalized number states never shows up in them. What is left of it lives in
    ``scale_sq``, which is kept canonical: a square-free odd integer, with rational square factors and any sqrt2
    pushed into the amplitudes.

    :param amplitudes: occupation number -> coefficient of ad**n|0>.
    :param scale_sq: the square of a common positive prefactor.
    """
    __slots__ = ('_amplitudes', '_scale_sq')

    def __init__(self, amplitudes: Mapping[int, Union[FieldScalar, Rational]] = None, scale_sq: Rational = 1):
        scale_sq = Fraction(scale_sq)
        if scale_sq < 0:
            raise InvalidArgument(f'squared scale must be nonnegative, got {scale_sq}')
        cleaned: Dict[int, FieldScalar] = {}
        for n, c in (amplitudes or {}).items():
            if n < 0:
                raise InvalidArgument(f'occupation numbers are nonnegative, got {n}')
            c = FieldScalar.of(c)
            if not c.is_zero():
                cleaned[n] = c
        if not cleaned or scale_sq == 0:
            self._amplitudes, self._scale_sq = {}, 1
            return
        root = sqrt_rational(scale_sq)
        self._amplitudes = {n: c * root.coefficient for n, c in cleaned.items()}
        self._scale_sq = root.radicand

    # ------------------------- #
    # Constructors
    # ------------------------- #
    @staticmethod
    def zero() -> 'FockKetExpansion':
        return FockKetExpansion()

    @staticmethod
    def vacuum() -> 'FockKetExpansion':
        return FockKetExpansion({0: 1})

    @staticmethod
    def number_state(n: int) -> 'FockKetExpansion':
        """ |n> = ad**n / sqrt(n!) |0>. """
        if n < 0:
            raise InvalidArgument(f'number states are labelled by nonnegative integers, got {n}')
        return FockKetExpansion({n: 1}, Fraction(1, factorial(n)))

    # ------------------------- #
    # Queries
    # ------------------------- #
    @property
    def amplitudes(self) -> Dict[int, FieldScalar]:
        return dict(self._amplitudes)

    @property
    def scale_sq(self) -> int:
        return self._scale_sq

    def amplitude(self, n: int) -> FieldScalar:
        return self._amplitudes.get(n, ZERO)

    def normalized_amplitude(self, n: int) -> RadicalScalar:
        """ <n|psi> = sqrt(scale_sq * n!) * c_n. """
        root = sqrt_rational(self._scale_sq * factorial(n))
        return RadicalScalar(root.coefficient * self.amplitude(n), root.radicand)

    def support(self):
        return sorted(self._amplitudes)

    def is_zero(self) -> bool:
        return not self._amplitudes

    # ------------------------- #
    # Linear structure
    # ------------------------- #
    def _check_compatible(self, other: 'FockKetExpansion'):
        if self.is_zero() or other.is_zero():
            return
        if self._scale_sq != other._scale_sq:
            raise InvalidArgument(f'Cannot add kets scaled by sqrt({self._scale_sq}) and sqrt({other._scale_sq})')

    def __add__(self, other: 'FockKetExpansion') -> 'FockKetExpansion':
        if not isinstance(other, FockKetExpansion):
            return NotImplemented
        self._check_compatible(other)
        scale = other._scale_sq if self.is_zero() else self._scale_sq
        amplitudes = dict(self._amplitudes)
        for n, c in other._amplitudes.items():
            amplitudes[n] = amplitudes.get(n, ZERO) + c
        return FockKetExpansion(amplitudes, scale)

    def __neg__(self) -> 'FockKetExpansion':
        return FockKetExpansion({n: -c for n, c in self._amplitudes.items()}, self._scale_sq)

    def __sub__(self, other: 'FockKetExpansion') -> 'FockKetExpansion':
        if not isinstance(other, FockKetExpansion):
            return NotImplemented
        return self + (-other)

    def __mul__(self, factor: Union[FieldScalar, Rational]) -> 'FockKetExpansion':
        try:
            f = FieldScalar.of(factor)
        except InvalidArgument:
            return NotImplemented
        return FockKetExpansion({n: c * f for n, c in self._amplitudes.items()}, self._scale_sq)

    __rmul__ = __mul__

    # ------------------------- #
    # Operator action and inner products
    # ------------------------- #
    def apply(self, operator: OperatorPoly) -> 'FockKetExpansion':
        """
        Acts with a normal-ordered operator: ad**r a**s ad**n|0> = n!/(n-s)! ad**(n-s+r)|0> for n >= s, else 0.
        """
        amplitudes: Dict[int, FieldScalar] = {}
        for word, coefficient in operator.items():
            if not coefficient.is_constant():
                raise UnboundIndeterminate(f'Cannot act on a ket with the xi-dependent coefficient {coefficient}')
            c = coefficient.constant_term()
            for n, amplitude in self._amplitudes.items():
                if n < word.annihilation:
                    continue
                target = n - word.annihilation + word.creation
                falling = factorial(n) // factorial(n - word.annihilation)
                amplitudes[target] = amplitudes.get(target, ZERO) + c * amplitude * falling
        return FockKetExpansion(amplitudes, self._scale_sq)

    def inner(self, other: 'FockKetExpansion') -> RadicalScalar:
        """ <self|other>, antilinear in the bra; <ad**m 0|ad**n 0> = n! delta_mn. """
        total = ZERO
        for n, c in self._amplitudes.items():
            d = other._amplitudes.get(n)
            if d is not None:
                total = total + c.conjugate() * d * factorial(n)
        root = sqrt_rational(self._scale_sq * other._scale_sq)
        return RadicalScalar(root.coefficient * total, root.radicand)

    def norm_squared(self) -> FieldScalar:
        total = ZERO
        for n, c in self._amplitudes.items():
            total = total + c.abs_squared() * factorial(n)
        return total * self._scale_sq

    def normalized(self) -> 'FockKetExpansion':
        """ Rescales to unit norm; only possible when the squared norm is rational. """
        norm_sq = self.norm_squared()
        if norm_sq.is_zero():
            raise InvalidArgument('The zero vector cannot be normalized')
        if not norm_sq.is_rational():
            raise InvalidArgument(f'Squared norm {norm_sq} is not rational')
        return FockKetExpansion(self._amplitudes, Fraction(self._scale_sq) / norm_sq.as_rational())

    # ------------------------- #
    # Comparison and printing
    # ------------------------- #
    def __eq__(self, other) -> bool:
        if not isinstance(other, FockKetExpansion):
            return NotImplemented
        return self._amplitudes == other._amplitudes and self._scale_sq == other._scale_sq

    def __hash__(self) -> int:
        return hash((frozenset(self._amplitudes.items()), self._scale_sq))

    def __str__(self) -> str:
        if self.is_zero():
            return '0'
        parts = [f'({self.normalized_amplitude(n)})|{n}>' for n in self.support()]
        return ' + '.join(parts)

    def __repr__(self) -> str:
        return f'FockKetExpansion({self})'


def apply_to_ket(operator: OperatorPoly, ket: FockKetExpansion) -> FockKetExpansion:
    return ket.apply(operator)


def vacuum() -> FockKetExpansion:
    return FockKetExpansion.vacuum()


def number_state(n: int) -> FockKetExpansion:
    return FockKetExpansion.number_state(n)


def matrix_element(m: int, operator: OperatorPoly, n: int) -> RadicalScalar:
    """ <m|A|n> between normalized number states. """
    value = number_state(m).inner(number_state(n).apply(operator))
    log.debug(f'<{m}|A|{n}> = {value}')
    return value
