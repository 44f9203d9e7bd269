from ladderwood.algebra.operator import LadderWord, OperatorPoly, normal_order, normal_order_word, commutator, \
    adjoint, vacuum_matrix_element
from ladderwood.algebra.ket import FockKetExpansion, apply_to_ket, vacuum, number_state, matrix_element


__all__ = ['LadderWord', 'OperatorPoly', 'normal_order', 'normal_order_word', 'commutator', 'adjoint',
           'vacuum_matrix_element', 'FockKetExpansion', 'apply_to_ket', 'vacuum', 'number_state', 'matrix_element']
