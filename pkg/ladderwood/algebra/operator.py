from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from numbers import Rational
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple, Union

from ladderwood.helpers.errors import InvalidArgument
from ladderwood.scalar.field import FieldScalar, I, INV_SQRT2
from ladderwood.scalar.poly import ScalarPoly, join_terms


CREATE = 'ad'
ANNIHILATE = 'a'

Coefficient = Union[ScalarPoly, FieldScalar, Rational, int]


@dataclass(frozen=True, order=True)
class LadderWord:
    """
    The normal-ordered monomial ``ad**creation * a**annihilation``; (0, 0) is the identity.
    """
    creation: int = 0
    annihilation: int = 0

    def __post_init__(self):
        if self.creation < 0 or self.annihilation < 0:
            raise InvalidArgument(f'ladder powers must be nonnegative, got {self}')

    @property
    def degree(self) -> int:
        return self.creation + self.annihilation

    def is_identity(self) -> bool:
        return self.creation == 0 and self.annihilation == 0

    def adjoint(self) -> 'LadderWord':
        return LadderWord(self.annihilation, self.creation)

    def __str__(self) -> str:
        parts = []
        for letter, power in ((CREATE, self.creation), (ANNIHILATE, self.annihilation)):
            if power == 1:
                parts.append(letter)
            elif power > 1:
                parts.append(f'{letter}^{power}')
        return '*'.join(parts) if parts else '1'


IDENTITY_WORD = LadderWord(0, 0)


def contract(s: int, t: int) -> List[Tuple[int, LadderWord]]:
    """
    Normal order of ``a**s * ad**t``: sum over k of C(s,k) C(t,k) k! ad**(t-k) a**(s-k).
    """
    return [(comb(s, k) * comb(t, k) * factorial(k), LadderWord(t - k, s - k)) for k in range(min(s, t) + 1)]


class OperatorPoly:
    """
    Element of the algebra generated by a and ad modulo [a, ad] = 1, stored in normal order (creators left).

    The canonical form is a mapping from ``LadderWord`` to a nonzero ``ScalarPoly`` coefficient, so two operators
    are equal exactly when their term maps are equal.
    """
    __slots__ = ('_terms', '_hash')

    def __init__(self, terms: Mapping[LadderWord, Coefficient] = None):
        cleaned: Dict[LadderWord, ScalarPoly] = {}
        for word, coefficient in (terms or {}).items():
            if not isinstance(word, LadderWord):
                word = LadderWord(*word)
            poly = ScalarPoly.of(coefficient)
            if not poly.is_zero():
                cleaned[word] = poly
        self._terms = cleaned
        self._hash = None

    # ------------------------- #
    # Constructors
    # ------------------------- #
    @staticmethod
    def scalar(value: Coefficient) -> 'OperatorPoly':
        return OperatorPoly({IDENTITY_WORD: value})

    @staticmethod
    def zero() -> 'OperatorPoly':
        return OperatorPoly()

    @staticmethod
    def identity() -> 'OperatorPoly':
        return OperatorPoly.scalar(1)

    @staticmethod
    def word(creation: int, annihilation: int, coefficient: Coefficient = 1) -> 'OperatorPoly':
        return OperatorPoly({LadderWord(creation, annihilation): coefficient})

    @staticmethod
    def creation() -> 'OperatorPoly':
        return OperatorPoly.word(1, 0)

    @staticmethod
    def annihilation() -> 'OperatorPoly':
        return OperatorPoly.word(0, 1)

    @staticmethod
    def position() -> 'OperatorPoly':
        """ x = (a + ad)/sqrt2 in natural units. """
        return OperatorPoly({LadderWord(1, 0): INV_SQRT2, LadderWord(0, 1): INV_SQRT2})

    @staticmethod
    def momentum() -> 'OperatorPoly':
        """ p = -i(a - ad)/sqrt2 = i(ad - a)/sqrt2 in natural units. """
        c = I * INV_SQRT2
        return OperatorPoly({LadderWord(1, 0): c, LadderWord(0, 1): -c})

    @staticmethod
    def number() -> 'OperatorPoly':
        return OperatorPoly.word(1, 1)

    @staticmethod
    def hamiltonian() -> 'OperatorPoly':
        """ H = ad*a + 1/2 in natural units. """
        return OperatorPoly({LadderWord(1, 1): 1, IDENTITY_WORD: Fraction(1, 2)})

    # ------------------------- #
    # Queries
    # ------------------------- #
    @property
    def terms(self) -> Dict[LadderWord, ScalarPoly]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, creation: int, annihilation: int) -> ScalarPoly:
        return self._terms.get(LadderWord(creation, annihilation), ScalarPoly())

    def is_zero(self) -> bool:
        return not self._terms

    def is_scalar(self) -> bool:
        return all(word.is_identity() for word in self._terms)

    def as_scalar(self) -> ScalarPoly:
        if not self.is_scalar():
            raise InvalidArgument(f'{self} is not a multiple of the identity')
        return self._terms.get(IDENTITY_WORD, ScalarPoly())

    def is_xi_free(self) -> bool:
        return all(c.is_constant() for c in self._terms.values())

    @property
    def degree(self) -> int:
        return max((word.degree for word in self._terms), default=-1)

    # ------------------------- #
    # Algebra
    # ------------------------- #
    @staticmethod
    def _coerce(other) -> 'OperatorPoly':
        if isinstance(other, OperatorPoly):
            return other
        return OperatorPoly.scalar(other)

    def __add__(self, other) -> 'OperatorPoly':
        try:
            o = OperatorPoly._coerce(other)
        except InvalidArgument:
            return NotImplemented
        terms = dict(self._terms)
        for word, c in o._terms.items():
            terms[word] = terms.get(word, ScalarPoly()) + c
        return OperatorPoly(terms)

    __radd__ = __add__

    def __neg__(self) -> 'OperatorPoly':
        return OperatorPoly({w: -c for w, c in self._terms.items()})

    def __sub__(self, other) -> 'OperatorPoly':
        try:
            o = OperatorPoly._coerce(other)
        except InvalidArgument:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> 'OperatorPoly':
        return OperatorPoly._coerce(other) - self

    def __mul__(self, other) -> 'OperatorPoly':
        if not isinstance(other, OperatorPoly):
            try:
                factor = ScalarPoly.of(other)
            except InvalidArgument:
                return NotImplemented
            return OperatorPoly({w: c * factor for w, c in self._terms.items()})
        terms: Dict[LadderWord, ScalarPoly] = {}
        for left, lc in self._terms.items():
            for right, rc in other._terms.items():
                product = lc * rc
                for multiplicity, middle in contract(left.annihilation, right.creation):
                    word = LadderWord(left.creation + middle.creation, middle.annihilation + right.annihilation)
                    terms[word] = terms.get(word, ScalarPoly()) + product * multiplicity
        return OperatorPoly(terms)

    def __rmul__(self, other) -> 'OperatorPoly':
        try:
            factor = ScalarPoly.of(other)
        except InvalidArgument:
            return NotImplemented
        return OperatorPoly({w: factor * c for w, c in self._terms.items()})

    def __pow__(self, exponent: int) -> 'OperatorPoly':
        if exponent < 0:
            raise InvalidArgument('negative powers of ladder operators are undefined')
        result, base = OperatorPoly.identity(), self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def adjoint(self) -> 'OperatorPoly':
        """
        Conjugates coefficients and swaps creation/annihilation powers; the swapped word is already normal-ordered.
        """
        return OperatorPoly({w.adjoint(): c.conjugate() for w, c in self._terms.items()})

    def substitute(self, creation_image: 'OperatorPoly', annihilation_image: 'OperatorPoly') -> 'OperatorPoly':
        """
        Applies the algebra homomorphism ad -> creation_image, a -> annihilation_image to every normal-ordered
        word, keeping the creation factor on the left.
        """
        result = OperatorPoly.zero()
        creation_powers = {0: OperatorPoly.identity()}
        annihilation_powers = {0: OperatorPoly.identity()}
        for word, c in self._terms.items():
            for k, base, cache in ((word.creation, creation_image, creation_powers),
                                   (word.annihilation, annihilation_image, annihilation_powers)):
                if k not in cache:
                    cache[k] = base ** k
            result = result + (creation_powers[word.creation] * annihilation_powers[word.annihilation]) * c
        return result

    # ------------------------- #
    # Comparison and printing
    # ------------------------- #
    def __eq__(self, other) -> bool:
        if isinstance(other, OperatorPoly):
            return self._terms == other._terms
        try:
            return self._terms == OperatorPoly.scalar(other)._terms
        except InvalidArgument:
            return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def sorted_terms(self) -> List[Tuple[LadderWord, ScalarPoly]]:
        """ Terms ordered by (creation, annihilation) descending. """
        return sorted(self._terms.items(), key=lambda item: (item[0].creation, item[0].annihilation), reverse=True)

    def __str__(self) -> str:
        terms = []
        for word, c in self.sorted_terms():
            if word.is_identity():
                terms.extend(c.term_strings())
                continue
            parts = c.term_strings()
            if len(parts) == 1:
                sign, body = parts[0]
                terms.append((sign, str(word) if body == '1' else f'{body}*{word}'))
            else:
                terms.append(('+', f'({c})*{word}'))
        return join_terms(terms)

    def __repr__(self) -> str:
        return f'OperatorPoly({self})'


# ------------------------- #
# Free functions
# ------------------------- #
def normal_order_word(letters: Sequence[str]) -> OperatorPoly:
    """
    Normal-orders a raw product of generators by repeated single swaps a*ad -> ad*a + 1.

    :param letters: sequence of 'a' / 'ad' read left to right.
    """
    result: Dict[Tuple[str, ...], int] = {}
    pending: List[Tuple[Tuple[str, ...], int]] = [(tuple(letters), 1)]
    while pending:
        word, weight = pending.pop()
        for letter in word:
            if letter not in (CREATE, ANNIHILATE):
                raise InvalidArgument(f'Unknown generator {letter!r}')
        swap_at = next((k for k in range(len(word) - 1) if word[k] == ANNIHILATE and word[k + 1] == CREATE), None)
        if swap_at is None:
            result[word] = result.get(word, 0) + weight
            continue
        pending.append((word[:swap_at] + (CREATE, ANNIHILATE) + word[swap_at + 2:], weight))
        pending.append((word[:swap_at] + word[swap_at + 2:], weight))

    terms: Dict[LadderWord, int] = {}
    for word, weight in result.items():
        key = LadderWord(word.count(CREATE), word.count(ANNIHILATE))
        terms[key] = terms.get(key, 0) + weight
    return OperatorPoly(terms)


def normal_order(raw: Union[OperatorPoly, Iterable[Tuple[Coefficient, Sequence[str]]]]) -> OperatorPoly:
    """
    Canonical normal-ordered form of a raw polynomial given as (coefficient, generator word) pairs.
    An ``OperatorPoly`` is already canonical and is returned unchanged.
    """
    if isinstance(raw, OperatorPoly):
        return raw
    result = OperatorPoly.zero()
    for coefficient, letters in raw:
        result = result + normal_order_word(letters) * coefficient
    return result


def commutator(a: OperatorPoly, b: OperatorPoly) -> OperatorPoly:
    return a * b - b * a


def adjoint(a: OperatorPoly) -> OperatorPoly:
    return a.adjoint()


def vacuum_matrix_element(a: OperatorPoly) -> ScalarPoly:
    """ <0|A|0>: the coefficient of the identity word of the normal-ordered operator. """
    return a.coefficient(0, 0)
