from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Tuple

from ladderwood.algebra.operator import OperatorPoly
from ladderwood.factorization.superpotential import schrodinger_ops
from ladderwood.helpers.errors import InvalidArgument
from ladderwood.helpers.log import log
from ladderwood.scalar.field import FieldScalar


class Dialect(str, Enum):
    schrodinger = 'schrodinger'
    dirac1947 = 'dirac1947'
    born_jordan = 'born_jordan'


@dataclass(frozen=True)
class DialectOperators:
    """
    A historical ladder-operator pair rewritten in natural units.

    All three dialects put the factor i on the position operator: the lowering operator is (p - i x)/sqrt2 = -i a
    and the raising one (p + i x)/sqrt2 = i ad. They differ in naming and in how the defining commutator and the
    Hamiltonian are written down.
    """
    dialect: Dialect
    lowering_symbol: str
    raising_symbol: str
    lowering: OperatorPoly
    raising: OperatorPoly

    def defining_commutator(self) -> OperatorPoly:
        """ lowering*raising - raising*lowering, printed as eta_bar*eta - eta*eta_bar or b*b^dag - b^dag*b. """
        return self.lowering * self.raising - self.raising * self.lowering

    def hamiltonian(self) -> OperatorPoly:
        """ raising*lowering + 1/2, the h*nu0*b^dag*b + h*nu0/2 form with h*nu0 = 1. """
        return self.raising * self.lowering + Fraction(1, 2)

    def alternate_hamiltonian(self) -> OperatorPoly:
        """ lowering*raising - 1/2. """
        return self.lowering * self.raising - Fraction(1, 2)

    def lowering_phase(self) -> FieldScalar:
        """ c in lowering = c * a. """
        return self.lowering.coefficient(0, 1).as_constant()

    def raising_phase(self) -> FieldScalar:
        return self.raising.coefficient(1, 0).as_constant()


_SYMBOLS = {
    Dialect.schrodinger: ('A0', 'A0^dag'),
    Dialect.dirac1947: ('eta_bar', 'eta'),
    Dialect.born_jordan: ('b', 'b^dag'),
}


def dialect(name) -> DialectOperators:
    try:
        key = Dialect(name)
    except ValueError:
        log.error(f'Unknown operator dialect: {name}')
        raise InvalidArgument(f'Unknown dialect {name!r}, expected one of {[d.value for d in Dialect]}')
    lowering, raising = schrodinger_ops()
    lowering_symbol, raising_symbol = _SYMBOLS[key]
    ops = DialectOperators(key, lowering_symbol, raising_symbol, lowering, raising)
    if ops.defining_commutator() != OperatorPoly.identity():
        raise InvalidArgument(f'{key.value}: {lowering_symbol} and {raising_symbol} are not canonical')
    return ops


def dialect_ops(name) -> Tuple[OperatorPoly, OperatorPoly]:
    """ (lowering, raising) of a dialect, with its defining commutator checked. """
    ops = dialect(name)
    return ops.lowering, ops.raising
