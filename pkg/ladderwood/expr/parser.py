from fractions import Fraction
from typing import List

from ladderwood.expr.ast import CONSTANTS, GENERATORS, Commutator, Constant, Exponential, Generator, Node, Power, \
    Product, Rational, Sum
from ladderwood.expr.lexer import END, INT, NAME, OP, Token, tokenize
from ladderwood.helpers.errors import ParseError


class Parser:
    """
    Recursive-descent parser for the operator expression language::

        expr   := term (("+"|"-") term)*
        term   := factor ("*" factor)*
        factor := atom ("^" nat)?
        atom   := generator | constant | rational | "(" expr ")" | "[" expr "," expr "]" | "exp" "(" expr ")"

    A minus sign in atom position is accepted too: followed by an integer it is part of a negative rational
    literal, otherwise it stands for ``-1*factor``.
    """
    def __init__(self, text: str):
        self.text = text
        self.tokens: List[Token] = tokenize(text)
        self.cursor = 0

    def peek(self) -> Token:
        return self.tokens[self.cursor]

    def next(self) -> Token:
        token = self.tokens[self.cursor]
        if token.kind != END:
            self.cursor += 1
        return token

    def _at_op(self, *ops: str) -> bool:
        token = self.peek()
        return token.kind == OP and token.text in ops

    def _source(self, token: Token) -> str:
        return self.text[token.span[0]:token.span[1]]

    def _fail(self, message: str, token: Token):
        raise ParseError(message, self._source(token) if token.kind != END else '<end of input>', token.span)

    def expect(self, op: str) -> Token:
        if not self._at_op(op):
            self._fail(f"Expected '{op}'", self.peek())
        return self.next()

    def parse(self) -> Node:
        node = self.expr()
        if self.peek().kind != END:
            token = self.peek()
            if token.kind in (NAME, INT) or self._at_op('(', '['):
                self._fail("Expected '*' between factors", token)
            self._fail('Unexpected token', token)
        return node

    def expr(self) -> Node:
        terms = [self.term()]
        signs = ['+']
        while self._at_op('+', '-'):
            signs.append(self.next().text)
            terms.append(self.term())
        if len(terms) == 1:
            return terms[0]
        return Sum(tuple(terms), tuple(signs), span=(terms[0].span[0], terms[-1].span[1]))

    def term(self) -> Node:
        factors = [self.factor()]
        while self._at_op('*'):
            self.next()
            factors.append(self.factor())
        if len(factors) == 1:
            return factors[0]
        return Product(tuple(factors), span=(factors[0].span[0], factors[-1].span[1]))

    def factor(self) -> Node:
        base = self.atom()
        if not self._at_op('^'):
            return base
        self.next()
        token = self.next()
        if token.kind != INT:
            self._fail('Expected a non-negative integer exponent', token)
        return Power(base, int(token.text), span=(base.span[0], token.span[1]))

    def _rational(self, start: int, negative: bool) -> Rational:
        numerator = self.next()
        end = numerator.span[1]
        value = Fraction(int(numerator.text))
        if self._at_op('/'):
            self.next()
            denominator = self.next()
            if denominator.kind != INT:
                self._fail('Expected an integer denominator', denominator)
            if int(denominator.text) == 0:
                self._fail('Zero denominator', denominator)
            value = Fraction(int(numerator.text), int(denominator.text))
            end = denominator.span[1]
        return Rational(-value if negative else value, span=(start, end))

    def atom(self) -> Node:
        token = self.peek()
        start = token.span[0]

        if token.kind == INT:
            return self._rational(start, negative=False)

        if token.kind == NAME:
            self.next()
            if token.text in GENERATORS:
                return Generator(token.text, span=token.span)
            if token.text in CONSTANTS:
                return Constant(token.text, span=token.span)
            if token.text == 'exp':
                self.expect('(')
                argument = self.expr()
                close = self.expect(')')
                return Exponential(argument, span=(start, close.span[1]))
            self._fail('Unknown identifier', token)

        if self._at_op('-'):
            self.next()
            if self.peek().kind == INT:
                return self._rational(start, negative=True)
            operand = self.factor()
            return Product((Rational(Fraction(-1), span=token.span), operand), span=(start, operand.span[1]))

        if self._at_op('('):
            self.next()
            node = self.expr()
            self.expect(')')
            return node

        if self._at_op('['):
            self.next()
            left = self.expr()
            self.expect(',')
            right = self.expr()
            close = self.expect(']')
            return Commutator(left, right, span=(start, close.span[1]))

        if token.kind == END:
            self._fail('Unexpected end of input', token)
        self._fail('Unexpected token', token)


def parse(text: str) -> Node:
    """
    Parses an operator expression into an AST.

    :param text: source text; ASCII syntax, with the Unicode spellings of the operators accepted as aliases.

    :returns: the root node; every node carries the span of the source text it was read from.
    """ # noqa
    return Parser(text).parse()
