import math
import unittest
from dataclasses import replace
from fractions import Fraction

import numpy as np

from ladderwood.helpers.errors import InvalidArgument, SpaceMismatch
from ladderwood.wavefunction.derivation import derive_momentum_wavefunction, derive_position_wavefunction
from ladderwood.wavefunction.integrals import evaluate, inner_product, is_orthonormal, overlap_matrix


class TestIntegrals(unittest.TestCase):
    def test_exact_orthonormality(self):
        for derive in (derive_position_wavefunction, derive_momentum_wavefunction):
            states = [derive(n) for n in range(13)]
            self.assertTrue(is_orthonormal(states))
        overlaps = overlap_matrix([derive_position_wavefunction(n) for n in range(3)])
        self.assertEqual(overlaps[1][1], 1)
        self.assertEqual(overlaps[0][2], 0)

    def test_mixed_spaces(self):
        with self.assertRaises(SpaceMismatch):
            inner_product(derive_position_wavefunction(0), derive_momentum_wavefunction(0))

    def test_rates_must_add_up(self):
        f = derive_position_wavefunction(1)
        with self.assertRaises(InvalidArgument):
            inner_product(f, replace(f, gaussian_rate=Fraction(1)))

    def test_evaluate(self):
        ground = derive_position_wavefunction(0)
        self.assertAlmostEqual(float(evaluate(ground, 0.0)), math.pi ** -0.25)
        xi = np.linspace(-12, 12, 24001)
        dx = xi[1] - xi[0]
        for n in range(5):
            values = evaluate(derive_position_wavefunction(n), xi)
            self.assertAlmostEqual(float(np.sum(values ** 2) * dx), 1.0, places=8)
