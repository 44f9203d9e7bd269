from fractions import Fraction

from ladderwood.expr.ast import ATOMIC, Commutator, Constant, Exponential, Generator, Node, Power, Product, \
    Rational, Sum
from ladderwood.helpers.errors import InvalidArgument


def _rational(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else f'{value.numerator}/{value.denominator}'


def _paren(text: str) -> str:
    return f'({text})'


def _power_base(node: Node) -> str:
    text = pretty(node)
    if isinstance(node, ATOMIC):
        return text
    if isinstance(node, Rational) and node.value >= 0 and node.value.denominator == 1:
        return text
    return _paren(text)


def pretty(node: Node) -> str:
    """
    Renders an AST in the ASCII surface syntax. Parsing the result yields an equal AST, and canonical forms
    printed by the algebra come back unchanged.
    """
    if isinstance(node, (Generator, Constant)):
        return node.name
    if isinstance(node, Rational):
        return _rational(node.value)
    if isinstance(node, Sum):
        out = ''
        for idx, (sign, term) in enumerate(zip(node.signs, node.terms)):
            text = _paren(pretty(term)) if isinstance(term, Sum) else pretty(term)
            out = text if idx == 0 else f'{out} {sign} {text}'
        return out
    if isinstance(node, Product):
        return '*'.join(_paren(pretty(f)) if isinstance(f, (Sum, Product)) else pretty(f) for f in node.factors)
    if isinstance(node, Power):
        return f'{_power_base(node.base)}^{node.exponent}'
    if isinstance(node, Commutator):
        return f'[{pretty(node.left)}, {pretty(node.right)}]'
    if isinstance(node, Exponential):
        return f'exp({pretty(node.argument)})'
    raise InvalidArgument(f'Cannot print node of type {type(node).__name__}')
