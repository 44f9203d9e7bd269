from dataclasses import dataclass

import numpy as np

from ladderwood.algebra.operator import OperatorPoly
from ladderwood.api.types import IdentityReport, OracleSettings
from ladderwood.helpers.log import log
from ladderwood.oracle.fock import materialize
from ladderwood.wavefunction.derivation import derive_wavefunction
from ladderwood.wavefunction.integrals import evaluate


@dataclass(frozen=True)
class PositionGrid:
    """
    Eigen-decomposition of the truncated position operator.

    The truncated x is the Jacobi matrix of the Hermite functions, so its eigenvalues are Gauss-Hermite nodes and
    column k of the eigenvector matrix holds psi_n(node_k) for n < N up to one common factor per column. Ratios
    ``vectors[n, k] / vectors[0, k]`` are therefore psi_n / psi_0 at the nodes, free of sign ambiguity.
    """
    nodes: np.ndarray
    vectors: np.ndarray

    @staticmethod
    def build(dimension: int) -> 'PositionGrid':
        x = materialize(OperatorPoly.position(), dimension).entries.real
        nodes, vectors = np.linalg.eigh(x)
        return PositionGrid(nodes, vectors)

    def inner_nodes(self, radius: float = 3.0) -> np.ndarray:
        return np.flatnonzero(np.abs(self.nodes) <= radius)

    def ratios(self, n: int, radius: float = 3.0) -> np.ndarray:
        idx = self.inner_nodes(radius)
        return self.vectors[n, idx] / self.vectors[0, idx]


def grid_check(n: int, settings: OracleSettings = OracleSettings(), space: str = 'position',
               grid: PositionGrid = None) -> IdentityReport:
    """
    psi_n / psi_0 from the exact closed form against the eigenvector ratios of the truncated position operator,
    at the nodes with |xi| <= 3. Momentum closed forms are the same Hermite functions, so they are
    checked against the same grid.
    """
    grid = grid or PositionGrid.build(settings.grid_dimension)
    idx = grid.inner_nodes()
    points = grid.nodes[idx]
    f = derive_wavefunction(n, space)
    ground = derive_wavefunction(0, space)
    expected = evaluate(f, points) / evaluate(ground, points)
    observed = grid.ratios(n)
    residual = float(np.max(np.abs(observed - expected) / np.maximum(1.0, np.abs(expected))))
    report = IdentityReport(f'grid[{space} n={n}]', settings.grid_dimension, len(idx), residual,
                            settings.grid_tolerance, residual < settings.grid_tolerance)
    if not report.passed:
        log.error(report.line())
    return report
