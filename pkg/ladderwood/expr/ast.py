from dataclasses import dataclass, field
from fractions import Fraction
from typing import Tuple


Span = Tuple[int, int]

GENERATORS = ('a', 'ad', 'x', 'p', 'H')
CONSTANTS = ('i', 'sqrt2', 'xi')


def _span():
    return field(default=(0, 0), compare=False, repr=False)


class Node:
    """ Base of every AST node; each node carries a source span that never takes part in equality. """
    span: Span


@dataclass(frozen=True)
class Generator(Node):
    name: str
    span: Span = _span()


@dataclass(frozen=True)
class Constant(Node):
    name: str
    span: Span = _span()


@dataclass(frozen=True)
class Rational(Node):
    value: Fraction
    span: Span = _span()


@dataclass(frozen=True)
class Sum(Node):
    """ signs[k] is '+' or '-' for terms[k]; the first sign is always '+'. """
    terms: Tuple[Node, ...]
    signs: Tuple[str, ...]
    span: Span = _span()


@dataclass(frozen=True)
class Product(Node):
    factors: Tuple[Node, ...]
    span: Span = _span()


@dataclass(frozen=True)
class Power(Node):
    base: Node
    exponent: int
    span: Span = _span()


@dataclass(frozen=True)
class Commutator(Node):
    left: Node
    right: Node
    span: Span = _span()


@dataclass(frozen=True)
class Exponential(Node):
    argument: Node
    span: Span = _span()


ATOMIC = (Generator, Constant, Commutator, Exponential)
