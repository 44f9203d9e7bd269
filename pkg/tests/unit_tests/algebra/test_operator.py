import unittest
from fractions import Fraction
from functools import reduce

from hypothesis import given, settings

from ladderwood.algebra.operator import LadderWord, OperatorPoly, commutator, normal_order, normal_order_word, \
    vacuum_matrix_element
from ladderwood.helpers.errors import InvalidArgument
from ladderwood.scalar.field import I
from ladderwood.scalar.poly import ScalarPoly
from tests.utils.strategies import letters, operators


A = OperatorPoly.annihilation()
AD = OperatorPoly.creation()


class TestOperatorPoly(unittest.TestCase):
    def test_canonical_commutators(self):
        self.assertEqual(commutator(A, AD), 1)
        self.assertEqual(commutator(OperatorPoly.position(), OperatorPoly.momentum()), I)
        for n in range(1, 13):
            self.assertEqual(commutator(A, AD ** n), OperatorPoly.word(n - 1, 0, n))

    def test_normal_order_word(self):
        self.assertEqual(normal_order_word(['a', 'ad']), AD * A + 1)
        self.assertEqual(normal_order_word([]), 1)
        with self.assertRaises(InvalidArgument):
            normal_order_word(['a', 'x'])

    def test_normal_order_raw_polynomial(self):
        raw = [(2, ['a', 'a', 'ad']), (-1, ['ad'])]
        expected = OperatorPoly.word(1, 2, 2) + OperatorPoly.word(0, 1, 4) - AD
        self.assertEqual(normal_order(raw), expected)

    def test_squared_ladder_product(self):
        expected = OperatorPoly.word(2, 2) + OperatorPoly.word(1, 1, 4) + 2
        product = normal_order([(1, ['a', 'a', 'ad', 'ad'])])
        self.assertEqual(product, expected)
        self.assertEqual(A ** 2 * AD ** 2, expected)
        self.assertEqual(str(product), 'ad^2*a^2 + 4*ad*a + 2')
        self.assertEqual(vacuum_matrix_element(product), ScalarPoly.of(2))

    @given(operators)
    @settings(max_examples=30, deadline=None)
    def test_normal_order_is_idempotent(self, x):
        self.assertEqual(normal_order(x), x)
        self.assertEqual(normal_order(normal_order(x)), normal_order(x))

    def test_generators(self):
        self.assertEqual(OperatorPoly.hamiltonian(), OperatorPoly.number() + Fraction(1, 2))
        self.assertEqual(str(OperatorPoly.hamiltonian()), 'ad*a + 1/2')
        self.assertEqual(str(OperatorPoly.position()), '1/2*sqrt2*ad + 1/2*sqrt2*a')
        self.assertEqual(OperatorPoly.position().degree, 1)
        self.assertEqual(vacuum_matrix_element(A * AD), ScalarPoly.of(1))

    def test_words(self):
        self.assertEqual(str(LadderWord(2, 1)), 'ad^2*a')
        self.assertEqual(LadderWord(2, 1).adjoint(), LadderWord(1, 2))
        with self.assertRaises(InvalidArgument):
            LadderWord(-1, 0)

    def test_negative_power(self):
        with self.assertRaises(InvalidArgument):
            A ** -1

    @given(letters)
    @settings(max_examples=50, deadline=None)
    def test_bubble_matches_contraction(self, word):
        generators = {'a': A, 'ad': AD}
        product = reduce(lambda left, letter: left * generators[letter], word, OperatorPoly.identity())
        self.assertEqual(normal_order_word(word), product)

    @given(operators, operators, operators)
    @settings(max_examples=30, deadline=None)
    def test_algebra_laws(self, x, y, z):
        self.assertEqual((x * y) * z, x * (y * z))
        self.assertEqual((x * y).adjoint(), y.adjoint() * x.adjoint())
        jacobi = commutator(x, commutator(y, z)) + commutator(y, commutator(z, x)) + commutator(z, commutator(x, y))
        self.assertTrue(jacobi.is_zero())

    @given(operators)
    @settings(max_examples=30, deadline=None)
    def test_substitute_identity(self, x):
        self.assertEqual(x.substitute(AD, A), x)
        self.assertEqual(x.adjoint().adjoint(), x)
