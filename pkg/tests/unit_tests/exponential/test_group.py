import unittest
from fractions import Fraction

from hypothesis import given, settings

from ladderwood.algebra.operator import OperatorPoly
from ladderwood.exponential.affine import AffineForm
from ladderwood.exponential.group import GroupElement, bch_compose, boost_operator, boost_residual, braid, \
    translation_operator, translation_residual
from ladderwood.scalar.field import I, INV_SQRT2
from ladderwood.scalar.poly import ScalarPoly, XI
from tests.utils.strategies import affine_forms


class TestGroupElement(unittest.TestCase):
    def test_central_part_is_folded(self):
        g = GroupElement.of(AffineForm(alpha=ScalarPoly.of(1), gamma=ScalarPoly.of(3)))
        self.assertEqual(g.log_prefactor, ScalarPoly.of(3))
        self.assertTrue(g.exponent.gamma.is_zero())

    def test_braid(self):
        a = AffineForm(alpha=ScalarPoly.of(1))
        b = AffineForm(beta=ScalarPoly.of(1))
        product = braid(b, a)
        self.assertEqual(product.first, a)
        self.assertEqual(product.second, b)
        # e^a e^ad = e^ad e^a e^[a, ad]
        self.assertEqual(product.central, ScalarPoly.of(1))

    def test_normal_split(self):
        g = GroupElement.of(AffineForm(alpha=XI, beta=-XI))
        split = g.normal_split()
        self.assertEqual(split.log_prefactor, XI * XI * Fraction(-1, 2))
        rebuilt = GroupElement(split.creation_form(), split.log_prefactor).compose(
            GroupElement.of(split.annihilation_form()))
        self.assertEqual(rebuilt, g)

    def test_translation_and_boost(self):
        t = translation_operator(Fraction(1, 2))
        self.assertEqual(t.exponent.alpha, ScalarPoly.of(INV_SQRT2 * Fraction(1, 2)))
        self.assertEqual(t.exponent.beta, -t.exponent.alpha)
        b = boost_operator(1)
        self.assertEqual(b.exponent.alpha, ScalarPoly.of(I * INV_SQRT2))
        for shift in (Fraction(1, 2), -3, XI):
            self.assertTrue(translation_residual(shift).is_zero())
            self.assertTrue(boost_residual(shift).is_zero())

    def test_conjugation(self):
        t = translation_operator(2)
        x = OperatorPoly.position()
        self.assertEqual(t.inverse().conjugate(x), x + 2)

    @given(affine_forms, affine_forms, affine_forms)
    @settings(max_examples=30, deadline=None)
    def test_group_laws(self, a, b, c):
        x, y, z = GroupElement.of(a), GroupElement.of(b), GroupElement.of(c)
        self.assertEqual(x.compose(y).compose(z), x.compose(y.compose(z)))
        self.assertTrue(x.compose(x.inverse()).is_identity())
        self.assertEqual(x.compose(GroupElement.identity()), x)

    @given(affine_forms, affine_forms)
    @settings(max_examples=30, deadline=None)
    def test_braid_agrees_with_bch(self, a, b):
        self.assertEqual(braid(a, b).as_group_element(), bch_compose(a, b))

    @given(affine_forms, affine_forms)
    @settings(max_examples=30, deadline=None)
    def test_double_braid_restores_order(self, a, b):
        once = braid(a, b)
        twice = braid(once.first, once.second)
        self.assertEqual(twice.first, AffineForm.coerce(a))
        self.assertEqual(twice.second, AffineForm.coerce(b))
        self.assertTrue((once.central + twice.central).is_zero())
