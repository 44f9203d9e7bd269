from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from ladderwood.helpers.errors import InvalidArgument


class UnitMode(str, Enum):
    natural = 'natural'
    si = 'si'


@dataclass(frozen=True)
class UnitSystem:
    """
    Display-only unit convention. Every computation runs in natural units (hbar = m = w0 = 1); in symbolic-SI
    mode the renderer re-dresses xi and the normalization constants with the dimensional symbols.
    """
    mode: UnitMode = UnitMode.natural

    @staticmethod
    def from_name(name: str) -> 'UnitSystem':
        try:
            return UnitSystem(UnitMode(name))
        except ValueError:
            raise InvalidArgument(f'Unknown unit system: {name}')

    @property
    def is_natural(self) -> bool:
        return self.mode == UnitMode.natural

    def argument(self, space: str) -> str:
        """ How the dimensionless variable xi is displayed. """
        if self.is_natural:
            return 'xi'
        if space == 'position':
            return 'sqrt(mω₀/ℏ)x'
        return 'p/sqrt(mℏω₀)'

    def gaussian(self, space: str, rate: Fraction) -> str:
        if self.is_natural:
            return f'exp(-{rate}*xi^2)' if rate != 1 else 'exp(-xi^2)'
        if space == 'position':
            return f'exp(-{rate}*(mω₀/ℏ)x^2)' if rate != 1 else 'exp(-(mω₀/ℏ)x^2)'
        return f'exp(-{rate}*p^2/(mℏω₀))' if rate != 1 else 'exp(-p^2/(mℏω₀))'

    def pi_power(self, space: str, exponent: Fraction) -> str:
        """ Ground-state normalization; pi^(-1/4) carries the dimensional factor (mω₀/πℏ)^{1/4} in SI mode. """
        if self.is_natural:
            return f'pi^({exponent})'
        if exponent != Fraction(-1, 4):
            return f'pi^({exponent})'
        if space == 'position':
            return '(mω₀/πℏ)^{1/4}'
        return '(1/(πmℏω₀))^{1/4}'
