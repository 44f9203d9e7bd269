import unittest

from sympy import Poly, hermite, symbols

from ladderwood.helpers.errors import InvalidArgument
from ladderwood.wavefunction.hermite import hermite_recurrence, hermite_reduction


def _sympy_coefficients(n: int):
    z = symbols('z')
    return tuple(int(c) for c in reversed(Poly(hermite(n, z), z).all_coeffs()))


class TestHermite(unittest.TestCase):
    def test_known_values(self):
        self.assertEqual(hermite_recurrence(0).coefficients, (1,))
        self.assertEqual(hermite_recurrence(1).coefficients, (0, 2))
        self.assertEqual(hermite_recurrence(4).coefficients, (12, 0, -48, 0, 16))
        self.assertEqual(str(hermite_recurrence(2)), '4*z^2 - 2')

    def test_against_sympy(self):
        for n in range(16):
            self.assertEqual(hermite_recurrence(n).coefficients, _sympy_coefficients(n))

    def test_reduction_matches_recurrence(self):
        for n in range(16):
            self.assertEqual(hermite_reduction(n), hermite_recurrence(n))

    def test_parity_and_leading_coefficient(self):
        for n in range(10):
            h = hermite_recurrence(n)
            self.assertTrue(h.has_parity())
            self.assertEqual(h.leading, 2 ** n)

    def test_numeric_evaluation(self):
        self.assertAlmostEqual(float(hermite_recurrence(3)(0.5)), 8 * 0.125 - 12 * 0.5)

    def test_negative_index(self):
        with self.assertRaises(InvalidArgument):
            hermite_recurrence(-1)
        with self.assertRaises(InvalidArgument):
            hermite_reduction(-1)
