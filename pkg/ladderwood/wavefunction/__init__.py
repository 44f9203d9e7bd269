from ladderwood.wavefunction.hermite import HermitePolynomial, hermite_recurrence, hermite_reduction
from ladderwood.wavefunction.bra import Space, EigenBra, eigenbra_vacuum_element
from ladderwood.wavefunction.derivation import ClosedFormWavefunction, DerivationTrace, DerivationStep, \
    derive_wavefunction, derive_with_trace, derive_position_wavefunction, derive_momentum_wavefunction, isomorphic, \
    render_wavefunction
from ladderwood.wavefunction.integrals import inner_product, evaluate, overlap_matrix, is_orthonormal


__all__ = ['HermitePolynomial', 'hermite_recurrence', 'hermite_reduction', 'Space', 'EigenBra',
           'eigenbra_vacuum_element', 'ClosedFormWavefunction', 'DerivationTrace', 'DerivationStep',
           'derive_wavefunction', 'derive_with_trace', 'derive_position_wavefunction', 'derive_momentum_wavefunction',
           'isomorphic', 'render_wavefunction', 'inner_product', 'evaluate', 'overlap_matrix', 'is_orthonormal']
