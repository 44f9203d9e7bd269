import unittest
from fractions import Fraction

from ladderwood.algebra.ket import number_state
from ladderwood.algebra.operator import OperatorPoly
from ladderwood.factorization.ladder import build_ladder, check_adjoint_intertwining, check_intertwining, \
    eigenstate, norm_product, raising_intertwining_residual, spectrum
from ladderwood.factorization.superpotential import OSCILLATOR, SuperpotentialLinear, oscillator_lowering_phase, \
    schrodinger_ops
from ladderwood.helpers.errors import InvalidArgument
from ladderwood.scalar.field import I


class TestFactorizationLadder(unittest.TestCase):
    def test_spectrum(self):
        self.assertEqual(spectrum(20), [Fraction(2 * n + 1, 2) for n in range(21)])
        self.assertEqual(spectrum(3), [Fraction(1, 2), Fraction(3, 2), Fraction(5, 2), Fraction(7, 2)])

    def test_factorized_hamiltonian(self):
        lowering, raising = schrodinger_ops()
        self.assertTrue((OperatorPoly.hamiltonian() - (raising * lowering + Fraction(1, 2))).is_zero())
        self.assertEqual(lowering, OperatorPoly.annihilation() * -I)
        self.assertEqual(oscillator_lowering_phase(), -I)

    def test_intertwining(self):
        ladder = build_ladder(7)
        self.assertEqual(ladder.depth, 7)
        self.assertEqual(len(ladder.hamiltonians), 8)
        for j in range(7):
            self.assertTrue(check_intertwining(ladder, j).is_zero())
            self.assertTrue(check_adjoint_intertwining(ladder, j).is_zero())
        with self.assertRaises(InvalidArgument):
            check_intertwining(ladder, 7)
        self.assertTrue(raising_intertwining_residual().is_zero())

    def test_invalid_depth(self):
        with self.assertRaises(InvalidArgument):
            build_ladder(0)

    def test_norm_product(self):
        ladder = build_ladder(7)
        for level in range(7):
            energy = ladder.energies[level]
            for j in range(7):
                expected = Fraction(1)
                for k in range(j + 1):
                    expected *= energy - ladder.energies[k]
                self.assertEqual(norm_product(energy, j, ladder), expected)
        # off the spectrum there is nothing to cross-check
        expected = (Fraction(1, 3) - Fraction(1, 2)) * (Fraction(1, 3) - Fraction(3, 2))
        self.assertEqual(norm_product(Fraction(1, 3), 1), expected)

    def test_eigenstates(self):
        for n in range(6):
            self.assertEqual(eigenstate(n), number_state(n))
        with self.assertRaises(InvalidArgument):
            eigenstate(-1)


class TestSuperpotential(unittest.TestCase):
    def test_oscillator(self):
        self.assertEqual(OSCILLATOR.ground_energy(), Fraction(1, 2))
        self.assertTrue(OSCILLATOR.reproduces_oscillator())
        self.assertEqual(OSCILLATOR.hamiltonian(), OperatorPoly.hamiltonian())

    def test_slope_does_not_matter(self):
        rescaled = SuperpotentialLinear(k=-1, slope=3)
        self.assertEqual(rescaled.lowering_operator(), OSCILLATOR.lowering_operator())
        with self.assertRaises(InvalidArgument):
            SuperpotentialLinear(slope=0)

    def test_other_frequencies(self):
        stiff = SuperpotentialLinear(k=-2)
        self.assertEqual(stiff.ground_energy(), 1)
        self.assertFalse(stiff.reproduces_oscillator())
