import unittest
from fractions import Fraction

import ladderwood
from ladderwood import energy_table, hermite, matel, normal_order_text, verify, wavefunction
from ladderwood.helpers.errors import InvalidArgument, ParseError


class TestHighLevel(unittest.TestCase):
    def test_package_surface(self):
        self.assertEqual(ladderwood.__version__, '0.1.0')
        self.assertEqual(ladderwood.expr.pretty(ladderwood.expr.parse('[a, ad]')), '[a, ad]')

    def test_normal_order(self):
        self.assertEqual(normal_order_text('a^2*ad^2'), 'ad^2*a^2 + 4*ad*a + 2')
        with self.assertRaises(ParseError):
            normal_order_text('a ad')

    def test_normal_order_group_element(self):
        self.assertEqual(normal_order_text('exp(ad)'), 'exp(0) * exp(ad)')
        self.assertEqual(normal_order_text('exp(ad + 2)'), 'exp(2) * exp(ad)')
        text = normal_order_text('exp(x)')
        self.assertTrue(text.startswith('exp(0) * exp('))
        self.assertEqual(normal_order_text(text), text)

    def test_matel(self):
        self.assertEqual(str(matel(2, 'ad^2', 0)), 'sqrt2')
        self.assertEqual(matel(4, 'x^4', 0), matel(0, 'x^4', 4))
        with self.assertRaises(InvalidArgument):
            matel(0, 'a', -2)

    def test_wavefunction_and_hermite(self):
        f = wavefunction(3, 'p')
        self.assertEqual(f.integer_coefficients(), list(hermite(3).coefficients))
        self.assertEqual(hermite(7, 'reduction'), hermite(7, 'recurrence'))
        with self.assertRaises(InvalidArgument):
            hermite(3, 'rodrigues')
        with self.assertRaises(InvalidArgument):
            wavefunction(-1)

    def test_energy_table(self):
        self.assertEqual(energy_table(2), [(0, Fraction(1, 2)), (1, Fraction(3, 2)), (2, Fraction(5, 2))])
        with self.assertRaises(InvalidArgument):
            energy_table(-1)

    def test_verify_with_dict_settings(self):
        lines, passed = verify('parser', {'random_cases': 3}, nr_procs=1)
        self.assertTrue(passed)
        self.assertTrue(lines[-1].endswith('checks passed'))
