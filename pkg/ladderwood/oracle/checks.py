from functools import reduce
from typing import Callable, Sequence, Tuple, Union

import numpy as np

from ladderwood.algebra.ket import matrix_element
from ladderwood.algebra.operator import OperatorPoly
from ladderwood.api.types import IdentityReport, OracleSettings
from ladderwood.exponential.affine import AffineForm, hadamard_conjugate
from ladderwood.exponential.group import GroupElement, bch_compose, braid, translation_operator, boost_operator
from ladderwood.helpers.errors import InvalidArgument
from ladderwood.helpers.log import log
from ladderwood.oracle.fock import FockMatrix, materialize, matrix_exponential, group_element_matrix


MatrixProduct = Union[FockMatrix, Sequence[FockMatrix]]

# residuals below this are rounding noise and carry no truncation signal
NOISE_FLOOR = 1e-12


def _compose(matrices: MatrixProduct) -> FockMatrix:
    if isinstance(matrices, FockMatrix):
        return matrices
    return reduce(lambda left, right: left @ right, matrices)


def check_identity(name: str, lhs: MatrixProduct, rhs: MatrixProduct, protected_block: int,
                   tolerance: float) -> IdentityReport:
    """
    Compares two matrix products on their leading ``protected_block`` x ``protected_block`` block.
    """
    left, right = _compose(lhs), _compose(rhs)
    if left.dimension != right.dimension:
        raise InvalidArgument(f'{name}: comparing dimensions {left.dimension} and {right.dimension}')
    if protected_block > left.dimension // 2:
        raise InvalidArgument(f'{name}: protected block {protected_block} exceeds N/2 = {left.dimension // 2}')
    residual = float(np.max(np.abs(left.block(protected_block) - right.block(protected_block))))
    report = IdentityReport(name, left.dimension, protected_block, residual, tolerance, residual < tolerance or
                            residual == 0.0)
    if report.passed:
        log.debug(report.line())
    else:
        log.error(report.line())
    return report


def _exp(form: AffineForm, dimension: int) -> FockMatrix:
    return group_element_matrix(GroupElement.of(form), dimension)


def braid_check(a: AffineForm, b: AffineForm, settings: OracleSettings = OracleSettings(),
                dimension: int = None) -> IdentityReport:
    """ e^A e^B against e^B e^A e^[A,B], the central factor taken from the exact braid. """
    n = dimension or settings.dimension
    product = braid(a, b)
    central = complex(product.central.as_constant())
    lhs = [_exp(a, n), _exp(b, n)]
    rhs = [_exp(product.first, n), _exp(product.second, n), FockMatrix.identity(n) * np.exp(central)]
    return check_identity(f'braid[{a}; {b}]', lhs, rhs, settings.protected_block, settings.tolerance)


def bch_check(a: AffineForm, b: AffineForm, settings: OracleSettings = OracleSettings(),
              dimension: int = None) -> IdentityReport:
    """ e^A e^B against the exact composed group element. """
    n = dimension or settings.dimension
    rhs = group_element_matrix(bch_compose(a, b), n)
    return check_identity(f'bch[{a}; {b}]', [_exp(a, n), _exp(b, n)], rhs, settings.protected_block,
                          settings.tolerance)


def hadamard_check(a: AffineForm, operator: OperatorPoly, settings: OracleSettings = OracleSettings(),
                   dimension: int = None) -> IdentityReport:
    """ e^A B e^-A against the exact substitution. """
    n = dimension or settings.dimension
    lhs = [_exp(a, n), materialize(operator, n), _exp(a.negate(), n)]
    rhs = materialize(hadamard_conjugate(a, operator), n)
    return check_identity(f'hadamard[{a}; {operator}]', lhs, rhs, settings.protected_block, settings.tolerance)


def translation_check(x0, settings: OracleSettings = OracleSettings(), dimension: int = None) -> IdentityReport:
    """ T^-1 x T = x + x0 with T = e^(-i x0 p). """
    n = dimension or settings.dimension
    t = translation_operator(x0)
    x = OperatorPoly.position()
    lhs = [group_element_matrix(t.inverse(), n), materialize(x, n), group_element_matrix(t, n)]
    rhs = materialize(x + x0, n)
    return check_identity(f'translation[x0={x0}]', lhs, rhs, settings.protected_block, settings.tolerance)


def boost_check(p0, settings: OracleSettings = OracleSettings(), dimension: int = None) -> IdentityReport:
    """ B^-1 p B = p + p0 with B = e^(i p0 x). """
    n = dimension or settings.dimension
    b = boost_operator(p0)
    p = OperatorPoly.momentum()
    lhs = [group_element_matrix(b.inverse(), n), materialize(p, n), group_element_matrix(b, n)]
    rhs = materialize(p + p0, n)
    return check_identity(f'boost[p0={p0}]', lhs, rhs, settings.protected_block, settings.tolerance)


def unitarity_check(a: AffineForm, settings: OracleSettings = OracleSettings(),
                    dimension: int = None) -> IdentityReport:
    """ An anti-Hermitian exponent exponentiates to a unitary. """
    n = dimension or settings.dimension
    u = matrix_exponential(materialize(a.to_operator(), n))
    return check_identity(f'unitary[{a}]', [u.dagger(), u], FockMatrix.identity(n), settings.protected_block,
                          settings.tolerance)


def matrix_element_check(operator: OperatorPoly, settings: OracleSettings = OracleSettings(),
                         max_index: int = None) -> IdentityReport:
    """ Exact <m|A|n> against the materialized matrix for all m, n <= max_index. """
    n_dim = settings.matel_dimension
    max_index = n_dim // 2 if max_index is None else max_index
    matrix = materialize(operator, n_dim)
    residual = 0.0
    for m in range(max_index + 1):
        for n in range(max_index + 1):
            exact = complex(matrix_element(m, operator, n))
            residual = max(residual, abs(exact - matrix[m, n]))
    report = IdentityReport(f'matel[{operator}]', n_dim, max_index + 1, residual, settings.matel_tolerance,
                            residual < settings.matel_tolerance)
    if not report.passed:
        log.error(report.line())
    return report


def convergence_check(name: str, check: Callable[[int], IdentityReport], small: int = 32,
                      large: int = 64) -> Tuple[IdentityReport, IdentityReport, bool]:
    """ Reruns a dimension-parameterized check at two truncations; the larger one must not do worse. """
    coarse, fine = check(small), check(large)
    converged = fine.max_residual <= max(coarse.max_residual, NOISE_FLOOR)
    if not converged:
        log.error(f'{name}: residual grew from {coarse.max_residual:.3e} (N={small}) '
                  f'to {fine.max_residual:.3e} (N={large})')
    return coarse, fine, converged
