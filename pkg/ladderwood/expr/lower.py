from typing import Union

from ladderwood.algebra.operator import OperatorPoly, commutator
from ladderwood.exponential.affine import AffineForm
from ladderwood.exponential.group import GroupElement
from ladderwood.expr.ast import Commutator, Constant, Exponential, Generator, Node, Power, Product, Rational, Sum
from ladderwood.expr.parser import parse
from ladderwood.helpers.errors import InvalidArgument, NonAffineExponent, UnsupportedExponent
from ladderwood.helpers.log import log
from ladderwood.scalar.field import I, SQRT2
from ladderwood.scalar.poly import XI


Lowered = Union[OperatorPoly, GroupElement]

_GENERATORS = {
    'a': OperatorPoly.annihilation,
    'ad': OperatorPoly.creation,
    'x': OperatorPoly.position,
    'p': OperatorPoly.momentum,
    'H': OperatorPoly.hamiltonian,
}

_CONSTANTS = {
    'i': lambda: OperatorPoly.scalar(I),
    'sqrt2': lambda: OperatorPoly.scalar(SQRT2),
    'xi': lambda: OperatorPoly.scalar(XI),
}


def _describe(value: Lowered) -> str:
    return 'a group element' if isinstance(value, GroupElement) else 'an operator'


def _mixed(node: Node, what: str, left: Lowered, right: Lowered):
    raise InvalidArgument(f'Cannot {what} {_describe(left)} and {_describe(right)} '
                          f'(at {node.span[0]}:{node.span[1]})')


def lower(node: Node) -> Lowered:
    """
    Lowers an AST to the algebra in natural units: x -> (a + ad)/sqrt2, p -> i(ad - a)/sqrt2, H -> ad*a + 1/2.
    Exponentials become group elements; their arguments must be affine in a and ad.
    """
    if isinstance(node, Generator):
        return _GENERATORS[node.name]()
    if isinstance(node, Constant):
        return _CONSTANTS[node.name]()
    if isinstance(node, Rational):
        return OperatorPoly.scalar(node.value)

    if isinstance(node, Sum):
        total = OperatorPoly.zero()
        for sign, term in zip(node.signs, node.terms):
            value = lower(term)
            if not isinstance(value, OperatorPoly):
                _mixed(node, 'add', total, value)
            total = total + value if sign == '+' else total - value
        return total

    if isinstance(node, Product):
        result = lower(node.factors[0])
        for factor in node.factors[1:]:
            value = lower(factor)
            if isinstance(result, OperatorPoly) and isinstance(value, OperatorPoly):
                result = result * value
            elif isinstance(result, GroupElement) and isinstance(value, GroupElement):
                result = result.compose(value)
            else:
                _mixed(node, 'multiply', result, value)
        return result

    if isinstance(node, Power):
        base = lower(node.base)
        if isinstance(base, OperatorPoly):
            return base ** node.exponent
        result = GroupElement.identity()
        for _ in range(node.exponent):
            result = result.compose(base)
        return result

    if isinstance(node, Commutator):
        left, right = lower(node.left), lower(node.right)
        if not (isinstance(left, OperatorPoly) and isinstance(right, OperatorPoly)):
            _mixed(node, 'take the commutator of', left, right)
        return commutator(left, right)

    if isinstance(node, Exponential):
        argument = lower(node.argument)
        if not isinstance(argument, OperatorPoly):
            log.error(f'Nested exponential at {node.span[0]}:{node.span[1]}')
            raise NonAffineExponent('The argument of exp must be an operator, not a group element', node.span)
        try:
            return GroupElement.of(AffineForm.from_operator(argument))
        except UnsupportedExponent as e:
            raise NonAffineExponent(f'{e} (at {node.span[0]}:{node.span[1]})', node.span) from e

    raise InvalidArgument(f'Cannot lower node of type {type(node).__name__}')


def lower_text(text: str) -> Lowered:
    return lower(parse(text))


def lower_operator(text: str) -> OperatorPoly:
    """ Parses and lowers ``text``, which must denote an operator rather than a group element. """
    value = lower_text(text)
    if not isinstance(value, OperatorPoly):
        raise InvalidArgument(f'{text!r} denotes a group element, expected an operator')
    return value
