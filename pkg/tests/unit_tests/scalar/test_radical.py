import unittest
from fractions import Fraction

from ladderwood.helpers.errors import InvalidArgument
from ladderwood.scalar.field import FieldScalar, ONE, SQRT2
from ladderwood.scalar.radical import RadicalScalar, sqrt_rational, squarefree_split


class TestRadicalScalar(unittest.TestCase):
    def test_squarefree_split(self):
        self.assertEqual(squarefree_split(72), (6, 2))
        self.assertEqual(squarefree_split(1), (1, 1))

    def test_sqrt_rational(self):
        self.assertEqual(sqrt_rational(8), SQRT2 * 2)
        self.assertEqual(sqrt_rational(Fraction(3, 4)), RadicalScalar(FieldScalar(Fraction(1, 2)), 3))
        self.assertEqual(sqrt_rational(Fraction(1, 2)), SQRT2 * Fraction(1, 2))
        self.assertTrue(sqrt_rational(0).is_zero())
        with self.assertRaises(InvalidArgument):
            sqrt_rational(-1)

    def test_canonical_radicand(self):
        with self.assertRaises(InvalidArgument):
            RadicalScalar(ONE, 2)
        self.assertEqual(RadicalScalar(FieldScalar(), 15).radicand, 1)

    def test_products(self):
        root3 = RadicalScalar(ONE, 3)
        self.assertEqual(root3 * root3, 3)
        self.assertEqual(root3 * RadicalScalar(ONE, 5), RadicalScalar(ONE, 15))
        self.assertAlmostEqual(complex(root3).real, 3 ** 0.5)

    def test_text(self):
        self.assertEqual(str(RadicalScalar(ONE, 3)), 'sqrt(3)')
        self.assertEqual(str(RadicalScalar(ONE, 1)), '1')

    def test_in_field(self):
        self.assertTrue(sqrt_rational(4).in_field())
        self.assertTrue(sqrt_rational(Fraction(9, 2)).in_field())
        self.assertFalse(sqrt_rational(3).in_field())
        self.assertEqual(str(sqrt_rational(Fraction(9, 2))), '3/2*sqrt2')
