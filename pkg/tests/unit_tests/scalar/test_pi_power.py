import math
import unittest
from fractions import Fraction

from ladderwood.helpers.errors import InvalidArgument
from ladderwood.scalar.pi_power import PiPower, double_factorial, gaussian_moment


class TestPiPower(unittest.TestCase):
    def test_double_factorial(self):
        self.assertEqual(double_factorial(-1), 1)
        self.assertEqual(double_factorial(0), 1)
        self.assertEqual(double_factorial(5), 15)
        self.assertEqual(double_factorial(6), 48)

    def test_gaussian_moments(self):
        self.assertEqual(gaussian_moment(0), PiPower(1, Fraction(1, 2)))
        self.assertEqual(gaussian_moment(2), PiPower(Fraction(3, 4), Fraction(1, 2)))
        self.assertAlmostEqual(float(gaussian_moment(1)), math.sqrt(math.pi) / 2)

    def test_quarter_powers_only(self):
        with self.assertRaises(InvalidArgument):
            PiPower(1, Fraction(1, 3))

    def test_products_add_exponents(self):
        norm = PiPower(1, Fraction(-1, 4))
        self.assertEqual(norm * norm * gaussian_moment(0), PiPower(1, 0))
        self.assertTrue((norm * norm * gaussian_moment(0)).is_pure())

    def test_moment_recurrence(self):
        self.assertEqual(gaussian_moment(3), PiPower(Fraction(15, 8), Fraction(1, 2)))
        self.assertAlmostEqual(float(gaussian_moment(3)), 15 * math.sqrt(math.pi) / 8)
        for k in range(1, 7):
            self.assertEqual(gaussian_moment(k), gaussian_moment(k - 1) * Fraction(2 * k - 1, 2))
