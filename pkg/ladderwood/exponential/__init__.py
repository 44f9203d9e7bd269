from ladderwood.exponential.affine import AffineForm, hadamard_conjugate
from ladderwood.exponential.group import GroupElement, NormalSplit, ReorderedProduct, braid, bch_compose, \
    translation_operator, boost_operator, translation_residual, boost_residual


__all__ = ['AffineForm', 'hadamard_conjugate', 'GroupElement', 'NormalSplit', 'ReorderedProduct', 'braid',
           'bch_compose', 'translation_operator', 'boost_operator', 'translation_residual', 'boost_residual']
