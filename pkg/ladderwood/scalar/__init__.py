from ladderwood.scalar.field import FieldScalar, field_add, field_mul, field_neg, field_inv
from ladderwood.scalar.poly import ScalarPoly, poly_add, poly_mul, poly_scale, XI
from ladderwood.scalar.pi_power import PiPower, gaussian_moment, double_factorial
from ladderwood.scalar.radical import RadicalScalar, sqrt_rational
from ladderwood.scalar.units import UnitSystem, UnitMode


__all__ = ['FieldScalar', 'field_add', 'field_mul', 'field_neg', 'field_inv', 'ScalarPoly', 'poly_add', 'poly_mul',
           'poly_scale', 'XI', 'PiPower', 'gaussian_moment', 'double_factorial', 'RadicalScalar', 'sqrt_rational',
           'UnitSystem', 'UnitMode']
