import unittest
from fractions import Fraction

from ladderwood.algebra.operator import OperatorPoly
from ladderwood.api.types import OracleSettings
from ladderwood.exponential.affine import AffineForm
from ladderwood.helpers.errors import InvalidArgument
from ladderwood.oracle.checks import bch_check, boost_check, braid_check, check_identity, convergence_check, \
    hadamard_check, matrix_element_check, translation_check, unitarity_check
from ladderwood.oracle.fock import FockMatrix, materialize, matrix_exponential
from ladderwood.oracle.grid import PositionGrid, grid_check


A = AffineForm(Fraction(1, 2), Fraction(-1, 3))
B = AffineForm(Fraction(-1, 4), Fraction(1, 2), Fraction(1, 5))


class TestOracleChecks(unittest.TestCase):
    def setUp(self):
        self.settings = OracleSettings()

    def test_exponential_identities(self):
        for report in (braid_check(A, B, self.settings), braid_check(B, A, self.settings),
                       bch_check(A, B, self.settings),
                       hadamard_check(A, OperatorPoly.hamiltonian(), self.settings),
                       translation_check(Fraction(1, 2), self.settings), boost_check(Fraction(-1, 3), self.settings),
                       unitarity_check(AffineForm(Fraction(1, 2), Fraction(-1, 2)), self.settings)):
            self.assertTrue(report.passed, report.line())

    def test_wrong_identity_fails(self):
        n = self.settings.dimension
        exp_a = matrix_exponential(materialize(A.to_operator(), n))
        report = check_identity('wrong', exp_a, FockMatrix.identity(n), 8, 1e-8)
        self.assertFalse(report.passed)
        self.assertIn('FAIL', report.line())

    def test_protected_block_bound(self):
        with self.assertRaises(InvalidArgument):
            check_identity('too wide', FockMatrix.identity(8), FockMatrix.identity(8), 5, 1e-8)

    def test_matrix_elements(self):
        h = OperatorPoly.hamiltonian()
        report = matrix_element_check(h * h + OperatorPoly.position(), self.settings)
        self.assertTrue(report.passed, report.line())

    def test_convergence(self):
        coarse, fine, converged = convergence_check('braid', lambda n: braid_check(A, B, self.settings, n))
        self.assertTrue(converged)
        self.assertEqual((coarse.dimension, fine.dimension), (32, 64))

    def test_grid(self):
        grid = PositionGrid.build(self.settings.grid_dimension)
        self.assertEqual(len(grid.nodes), self.settings.grid_dimension)
        for n in range(5):
            for space in ('position', 'momentum'):
                report = grid_check(n, self.settings, space, grid)
                self.assertTrue(report.passed, report.line())

    def test_settings_clamp_protected_block(self):
        settings = OracleSettings.from_dict({'dimension': 10, 'protected_block': 8})
        self.assertEqual(settings.protected_block, 5)
        self.assertEqual(OracleSettings.from_json(settings.to_json()), settings)
