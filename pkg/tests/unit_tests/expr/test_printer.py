import unittest

from hypothesis import given, settings

from ladderwood.algebra.operator import OperatorPoly
from ladderwood.expr.lower import lower_text
from ladderwood.expr.parser import parse
from ladderwood.expr.printer import pretty
from ladderwood.scalar.field import FieldScalar
from ladderwood.scalar.poly import ScalarPoly
from ladderwood.verify.parser import CORPUS
from tests.utils.strategies import operators


class TestPrinter(unittest.TestCase):
    def test_corpus_round_trip(self):
        for text in CORPUS:
            tree = parse(text)
            self.assertEqual(parse(pretty(tree)), tree, text)

    def test_parenthesization(self):
        self.assertEqual(pretty(parse('(a + ad)*(a - ad)')), '(a + ad)*(a - ad)')
        self.assertEqual(pretty(parse('(-1)^2')), '(-1)^2')
        self.assertEqual(pretty(parse('(3/2)^2')), '(3/2)^2')
        self.assertEqual(pretty(parse('(a^2)^3')), '(a^2)^3')
        self.assertEqual(pretty(parse('2^3')), '2^3')
        self.assertEqual(pretty(parse('a - (ad - x)')), 'a - (ad - x)')
        self.assertEqual(pretty(parse('((a))')), 'a')

    def test_aliases_print_as_ascii(self):
        self.assertEqual(pretty(parse('√2*ξ*a†')), 'sqrt2*xi*ad')

    def test_multi_part_constants_are_fixed_points(self):
        constant = OperatorPoly.scalar(FieldScalar(0, 0, 1, 1))
        self.assertEqual(str(constant), 'sqrt2 + i*sqrt2')
        mixed = OperatorPoly.scalar(ScalarPoly([FieldScalar(1, 1), 0, 2])) + OperatorPoly.creation()
        self.assertEqual(str(mixed), 'ad + 2*xi^2 + 1 + i')
        for operator in (constant, mixed):
            text = str(operator)
            self.assertEqual(pretty(parse(text)), text)
            self.assertEqual(lower_text(text), operator)

    @given(operators)
    @settings(max_examples=50, deadline=None)
    def test_canonical_forms_are_fixed_points(self, operator):
        text = str(operator)
        self.assertEqual(pretty(parse(text)), text)
