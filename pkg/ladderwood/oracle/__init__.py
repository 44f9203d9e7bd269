from ladderwood.oracle.fock import FockMatrix, materialize, matrix_exponential, group_element_matrix, \
    truncation_artifact
from ladderwood.oracle.checks import check_identity, braid_check, bch_check, hadamard_check, translation_check, \
    boost_check, unitarity_check, matrix_element_check, convergence_check
from ladderwood.oracle.grid import PositionGrid, grid_check


__all__ = ['FockMatrix', 'materialize', 'matrix_exponential', 'group_element_matrix', 'truncation_artifact',
           'check_identity', 'braid_check', 'bch_check', 'hadamard_check', 'translation_check', 'boost_check',
           'unitarity_check', 'matrix_element_check', 'convergence_check', 'PositionGrid', 'grid_check']
