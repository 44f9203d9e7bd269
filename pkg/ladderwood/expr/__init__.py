from ladderwood.expr.ast import Node, Generator, Constant, Rational, Sum, Product, Power, Commutator, Exponential
from ladderwood.expr.lexer import Token, tokenize
from ladderwood.expr.parser import Parser, parse
from ladderwood.expr.printer import pretty
from ladderwood.expr.lower import lower, lower_text, lower_operator


__all__ = ['Node', 'Generator', 'Constant', 'Rational', 'Sum', 'Product', 'Power', 'Commutator', 'Exponential',
           'Token', 'tokenize', 'Parser', 'parse', 'pretty', 'lower', 'lower_text', 'lower_operator']
