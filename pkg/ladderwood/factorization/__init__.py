from ladderwood.factorization.superpotential import SuperpotentialLinear, OSCILLATOR, schrodinger_ops, \
    oscillator_lowering_phase
from ladderwood.factorization.ladder import FactorizationLadder, build_ladder, spectrum, check_intertwining, \
    check_adjoint_intertwining, raising_intertwining_residual, norm_product, eigenstate, positivity_witness
from ladderwood.factorization.dialects import Dialect, DialectOperators, dialect, dialect_ops


__all__ = ['SuperpotentialLinear', 'OSCILLATOR', 'schrodinger_ops', 'oscillator_lowering_phase',
           'FactorizationLadder', 'build_ladder', 'spectrum', 'check_intertwining', 'check_adjoint_intertwining',
           'raising_intertwining_residual', 'norm_product', 'eigenstate', 'positivity_witness', 'Dialect',
           'DialectOperators', 'dialect', 'dialect_ops']
