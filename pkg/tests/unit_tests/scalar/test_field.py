import unittest
from fractions import Fraction

from hypothesis import given, settings

from ladderwood.helpers.errors import DivisionByZero, InvalidArgument
from ladderwood.scalar.field import FieldScalar, I, ONE, SQRT2, ZERO, field_add, field_inv, field_mul, field_neg
from tests.utils.strategies import field_scalars, nonzero_field_scalars


class TestFieldScalar(unittest.TestCase):
    def test_basis_products(self):
        self.assertEqual(I * I, -1)
        self.assertEqual(SQRT2 * SQRT2, 2)
        self.assertEqual((I * SQRT2) ** 2, -2)
        self.assertEqual(FieldScalar.sqrt2_power(3), SQRT2 * 2)
        self.assertEqual(FieldScalar.sqrt2_power(-2), Fraction(1, 2))

    def test_division_by_zero(self):
        with self.assertRaises(DivisionByZero):
            ONE / ZERO
        with self.assertRaises(ZeroDivisionError):
            ZERO.inverse()

    def test_rejects_floats(self):
        with self.assertRaises(InvalidArgument):
            FieldScalar.of(0.5)

    def test_canonical_text(self):
        self.assertEqual(str(ZERO), '0')
        self.assertEqual(str(FieldScalar(Fraction(1, 2), 1)), '1/2 + i')
        self.assertEqual(str(-SQRT2), '-1*sqrt2')
        self.assertEqual(str(FieldScalar(-3, 0, 0, Fraction(2, 3))), '-3 + 2/3*i*sqrt2')

    def test_exact_sign(self):
        self.assertEqual(FieldScalar(1, 0, -1).sign(), -1)
        self.assertEqual(FieldScalar(3, 0, -2).sign(), 1)
        with self.assertRaises(InvalidArgument):
            I.sign()

    @given(nonzero_field_scalars)
    @settings(max_examples=50, deadline=None)
    def test_inverse(self, x):
        self.assertEqual(x * x.inverse(), 1)

    @given(field_scalars, field_scalars)
    @settings(max_examples=50, deadline=None)
    def test_automorphisms(self, x, y):
        self.assertEqual((x * y).conjugate(), x.conjugate() * y.conjugate())
        self.assertEqual((x + y).sqrt2_conjugate(), x.sqrt2_conjugate() + y.sqrt2_conjugate())
        self.assertEqual((x * y).sqrt2_conjugate(), x.sqrt2_conjugate() * y.sqrt2_conjugate())

    @given(field_scalars)
    @settings(max_examples=50, deadline=None)
    def test_complex_value(self, x):
        self.assertAlmostEqual(complex(x.abs_squared()).real, abs(complex(x)) ** 2, places=9)

    def test_functional_forms(self):
        x = FieldScalar(1, 0, 1)
        self.assertEqual(field_add(x, Fraction(1, 2)), FieldScalar(Fraction(3, 2), 0, 1))
        self.assertEqual(field_inv(x), FieldScalar(-1, 0, 1))
        self.assertEqual(field_mul(x, field_neg(x)), -(x * x))
        self.assertEqual(field_mul(x, field_inv(x)), 1)
        self.assertEqual(field_inv(SQRT2), FieldScalar(q2=Fraction(1, 2)))
