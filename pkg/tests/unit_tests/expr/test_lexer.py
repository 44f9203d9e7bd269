import unittest

from ladderwood.expr.lexer import END, INT, NAME, OP, tokenize
from ladderwood.helpers.errors import ParseError


class TestLexer(unittest.TestCase):
    def test_kinds_and_spans(self):
        tokens = tokenize('ad^2 + 3/4*xi')
        self.assertEqual([t.kind for t in tokens], [NAME, OP, INT, OP, INT, OP, INT, OP, NAME, END])
        self.assertEqual([t.text for t in tokens[:-1]], ['ad', '^', '2', '+', '3', '/', '4', '*', 'xi'])
        self.assertEqual(tokens[0].span, (0, 2))
        self.assertEqual(tokens[-2].span, (11, 13))
        self.assertEqual(tokens[-1].span, (13, 13))

    def test_aliases_keep_original_spans(self):
        tokens = tokenize('√2*ξ')
        self.assertEqual([t.text for t in tokens[:-1]], ['sqrt2', '*', 'xi'])
        self.assertEqual(tokens[0].span, (0, 2))
        self.assertEqual(tokens[2].span, (3, 4))

    def test_dagger_alias(self):
        for spelling in ('â†', 'a†'):
            tokens = tokenize(spelling)
            self.assertEqual((tokens[0].kind, tokens[0].text), (NAME, 'ad'))
            self.assertEqual(tokens[0].span, (0, len(spelling)))

    def test_unexpected_character(self):
        with self.assertRaises(ParseError) as ctx:
            tokenize('a + $')
        self.assertEqual(ctx.exception.span, (4, 5))
        self.assertEqual(ctx.exception.token, '$')
