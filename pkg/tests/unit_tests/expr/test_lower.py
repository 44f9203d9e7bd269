import unittest
from fractions import Fraction

from hypothesis import given, settings

from ladderwood.algebra.operator import OperatorPoly
from ladderwood.exponential.affine import AffineForm
from ladderwood.exponential.group import GroupElement
from ladderwood.expr.lower import lower_operator, lower_text
from ladderwood.helpers.errors import InvalidArgument, NonAffineExponent
from ladderwood.scalar.field import I
from tests.utils.strategies import operators


class TestLower(unittest.TestCase):
    def test_generators(self):
        self.assertEqual(lower_operator('H'), OperatorPoly.number() + Fraction(1, 2))
        self.assertEqual(lower_operator('[x, p]'), OperatorPoly.scalar(I))
        self.assertEqual(lower_operator('[a, ad]'), 1)
        self.assertEqual(lower_operator('a*ad'), lower_operator('ad*a + 1'))
        self.assertEqual(str(lower_operator('x')), '1/2*sqrt2*ad + 1/2*sqrt2*a')

    def test_hamiltonian_from_quadratures(self):
        self.assertEqual(lower_operator('p^2*1/2 + x^2*1/2'), lower_operator('H'))

    def test_exponentials(self):
        self.assertEqual(lower_text('exp(a)'), GroupElement.of(AffineForm(0, 1)))
        self.assertEqual(lower_text('exp(a)*exp(ad)'), GroupElement(AffineForm(1, 1), Fraction(1, 2)))
        self.assertEqual(lower_text('exp(ad)^3'), GroupElement.of(AffineForm(3, 0)))
        self.assertEqual(lower_text('exp(a + 2)'), GroupElement(AffineForm(0, 1), 2))

    def test_non_affine_exponent(self):
        with self.assertRaises(NonAffineExponent) as ctx:
            lower_text('a + exp(x*p)')
        self.assertEqual(ctx.exception.span, (4, 12))
        with self.assertRaises(NonAffineExponent):
            lower_text('exp(exp(a))')

    def test_mixed_values(self):
        with self.assertRaises(InvalidArgument):
            lower_text('a + exp(a)')
        with self.assertRaises(InvalidArgument):
            lower_text('a*exp(a)')
        with self.assertRaises(InvalidArgument):
            lower_operator('exp(a)')

    @given(operators)
    @settings(max_examples=50, deadline=None)
    def test_canonical_text_lowers_back(self, operator):
        self.assertEqual(lower_operator(str(operator)), operator)
