import unittest

from ladderwood.algebra.operator import OperatorPoly
from ladderwood.factorization.dialects import Dialect, dialect, dialect_ops
from ladderwood.helpers.errors import InvalidArgument
from ladderwood.scalar.field import I


class TestDialects(unittest.TestCase):
    def test_every_dialect_is_canonical(self):
        for name in Dialect:
            ops = dialect(name)
            self.assertEqual(ops.defining_commutator(), OperatorPoly.identity())
            self.assertEqual(ops.hamiltonian(), OperatorPoly.hamiltonian())
            self.assertEqual(ops.alternate_hamiltonian(), OperatorPoly.hamiltonian())

    def test_phases(self):
        ops = dialect('dirac1947')
        self.assertEqual(ops.lowering_phase(), -I)
        self.assertEqual(ops.raising_phase(), I)
        self.assertEqual((ops.lowering_symbol, ops.raising_symbol), ('eta_bar', 'eta'))

    def test_ops_pair(self):
        lowering, raising = dialect_ops(Dialect.born_jordan)
        self.assertEqual(raising, lowering.adjoint())

    def test_unknown_dialect(self):
        with self.assertRaises(InvalidArgument):
            dialect('heisenberg1925')
