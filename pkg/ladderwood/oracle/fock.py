"""
Truncated number-basis realization of the ladder algebra, used only to falsify the exact engine.
"""
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy.linalg import expm

from ladderwood.algebra.operator import OperatorPoly
from ladderwood.exponential.group import GroupElement
from ladderwood.helpers.errors import InvalidArgument, UnboundIndeterminate


@dataclass(frozen=True, eq=False)
class FockMatrix:
    """
    N x N complex matrix in the number basis |0>, ..., |N-1>.
    """
    dimension: int
    entries: np.ndarray

    def __post_init__(self):
        entries = np.asarray(self.entries, dtype=complex)
        if entries.shape != (self.dimension, self.dimension):
            raise InvalidArgument(f'Expected a {self.dimension}x{self.dimension} matrix, got shape {entries.shape}')
        entries.setflags(write=False)
        object.__setattr__(self, 'entries', entries)

    @staticmethod
    def identity(dimension: int) -> 'FockMatrix':
        return FockMatrix(dimension, np.eye(dimension, dtype=complex))

    @staticmethod
    def annihilation(dimension: int) -> 'FockMatrix':
        """ sqrt(n) on the first superdiagonal: a|n> = sqrt(n)|n-1>. """
        return FockMatrix(dimension, np.diag(np.sqrt(np.arange(1, dimension)), 1))

    @staticmethod
    def creation(dimension: int) -> 'FockMatrix':
        return FockMatrix(dimension, np.diag(np.sqrt(np.arange(1, dimension)), -1))

    def _check(self, other: 'FockMatrix'):
        if self.dimension != other.dimension:
            raise InvalidArgument(f'Dimension mismatch: {self.dimension} vs {other.dimension}')

    def __matmul__(self, other: 'FockMatrix') -> 'FockMatrix':
        self._check(other)
        return FockMatrix(self.dimension, self.entries @ other.entries)

    def __add__(self, other: 'FockMatrix') -> 'FockMatrix':
        self._check(other)
        return FockMatrix(self.dimension, self.entries + other.entries)

    def __sub__(self, other: 'FockMatrix') -> 'FockMatrix':
        self._check(other)
        return FockMatrix(self.dimension, self.entries - other.entries)

    def __mul__(self, factor: complex) -> 'FockMatrix':
        return FockMatrix(self.dimension, self.entries * complex(factor))

    __rmul__ = __mul__

    def dagger(self) -> 'FockMatrix':
        return FockMatrix(self.dimension, self.entries.conj().T)

    def block(self, size: int) -> np.ndarray:
        return self.entries[:size, :size]

    def __getitem__(self, index):
        return self.entries[index]


def _power(matrix: np.ndarray, k: int, cache: dict) -> np.ndarray:
    if k not in cache:
        cache[k] = np.linalg.matrix_power(matrix, k)
    return cache[k]


def materialize(operator: OperatorPoly, dimension: int, xi: Optional[complex] = None) -> FockMatrix:
    """
    Evaluates a normal-ordered operator on the truncated basis. Every creation factor stands left of every
    annihilation factor, so the entries that survive truncation are exact.

    :param xi: numeric value of the indeterminate, needed when any coefficient depends on it.
    """
    if dimension < 2:
        raise InvalidArgument(f'Truncation dimension must be at least 2, got {dimension}')
    a = FockMatrix.annihilation(dimension).entries
    ad = FockMatrix.creation(dimension).entries
    creation_cache, annihilation_cache = {}, {}
    result = np.zeros((dimension, dimension), dtype=complex)
    for word, coefficient in operator.items():
        if coefficient.is_constant():
            value = complex(coefficient.constant_term())
        elif xi is None:
            raise UnboundIndeterminate(f'Coefficient {coefficient} depends on xi and no value was supplied')
        else:
            value = complex(coefficient.evaluate_complex(xi))
        result += value * (_power(ad, word.creation, creation_cache) @ _power(a, word.annihilation,
                                                                                annihilation_cache))
    return FockMatrix(dimension, result)


def matrix_exponential(matrix: FockMatrix) -> FockMatrix:
    """ scipy's scaling-and-squaring Pade exponential. """
    return FockMatrix(matrix.dimension, expm(matrix.entries))


def group_element_matrix(element: GroupElement, dimension: int, xi: Optional[complex] = None) -> FockMatrix:
    """ e^P * expm(F) for the canonical presentation of a group element. """
    prefactor = element.log_prefactor
    if prefactor.is_constant():
        log_value = complex(prefactor.constant_term())
    elif xi is None:
        raise UnboundIndeterminate(f'Prefactor exp({prefactor}) depends on xi and no value was supplied')
    else:
        log_value = complex(prefactor.evaluate_complex(xi))
    exponent = materialize(element.exponent.to_operator(), dimension, xi)
    return matrix_exponential(exponent) * np.exp(log_value)


def truncation_artifact(dimension: int) -> np.ndarray:
    """ Diagonal of a a^dag - a^dag a in the truncation: (1, ..., 1, 1 - N). """
    a, ad = FockMatrix.annihilation(dimension), FockMatrix.creation(dimension)
    return np.diag((a @ ad - ad @ a).entries).real
