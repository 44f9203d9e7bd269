from enum import Enum
from functools import lru_cache
from typing import Union

from ladderwood.algebra.operator import OperatorPoly
from ladderwood.exponential.affine import AffineForm
from ladderwood.helpers.errors import InvalidArgument
from ladderwood.scalar.poly import ScalarPoly


@lru_cache(maxsize=None)
def _creation_moment(sign: int, r: int) -> int:
    if r == 0:
        return 1
    if r == 1:
        return 0
    return sign * (r - 1) * _creation_moment(sign, r - 2)


class Space(str, Enum):
    position = 'position'
    momentum = 'momentum'

    @staticmethod
    def from_name(name: Union[str, 'Space']) -> 'Space':
        aliases = {'x': Space.position, 'p': Space.momentum}
        if isinstance(name, Space):
            return name
        if name in aliases:
            return aliases[name]
        try:
            return Space(name)
        except ValueError:
            raise InvalidArgument(f'Unknown space {name!r}, expected position (x) or momentum (p)')


class EigenBra:
    """
    The eigenbra <x=0| (or <p=0|), never represented as a vector.

    It enters only through two rules: it annihilates x (resp. p) acting to the left, and it pairs with the vacuum to
    the nonzero constant <x=0|0>. Since x is proportional to a + ad, on this bra ad acts as -a (on <p=0|, p is
    proportional to ad - a and ad acts as +a). With a|0> = 0 this gives the functional
        G_r = <x=0|ad^r|0> / <x=0|0> = -(r-1) G_(r-2)       (+(r-1) for momentum),   G_0 = 1, G_1 = 0.
    """

    def __init__(self, space: Union[str, Space]):
        self.space = Space.from_name(space)
        self.sign = -1 if self.space == Space.position else 1

    def creation_moment(self, r: int) -> int:
        if r < 0:
            raise InvalidArgument(f'power must be nonnegative, got {r}')
        return _creation_moment(self.sign, r)

    def vacuum_element(self, operator: OperatorPoly) -> ScalarPoly:
        """ <bra|A|0> / <bra|0>; only normal-ordered words without annihilators survive on |0>. """
        total = ScalarPoly()
        for word, c in operator.items():
            if word.annihilation:
                continue
            moment = self.creation_moment(word.creation)
            if moment:
                total = total + c * moment
        return total

    def kills(self, form: AffineForm) -> bool:
        """ True when the ladder part of the exponent is proportional to x (resp. p), so <bra|e^F = <bra|. """
        if self.space == Space.position:
            return form.alpha == form.beta
        return form.alpha == -form.beta

    def __eq__(self, other) -> bool:
        return isinstance(other, EigenBra) and other.space == self.space

    def __hash__(self) -> int:
        return hash(self.space)

    def __repr__(self) -> str:
        return f'EigenBra({self.space.value})'


def eigenbra_vacuum_element(operator: OperatorPoly, space: Union[str, Space]) -> ScalarPoly:
    return EigenBra(space).vacuum_element(operator)
