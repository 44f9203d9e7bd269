import re
from dataclasses import dataclass
from typing import List

from ladderwood.expr.ast import Span
from ladderwood.helpers.errors import ParseError


INT = 'INT'
NAME = 'NAME'
OP = 'OP'
END = 'END'

# input-only spellings, precomposed and with a combining hat; the printer never emits them
ALIASES = {
    'â†': 'ad',
    'â†': 'ad',
    'a†': 'ad',
    'â': 'a',
    'â': 'a',
    'ξ': 'xi',
    '√2': 'sqrt2',
    'Ĥ': 'H',
    'Ĥ': 'H',
    'x̂': 'x',
    'p̂': 'p',
}

_ALIAS_PATTERN = '|'.join(re.escape(alias) for alias in sorted(ALIASES, key=len, reverse=True))
_TOKEN_RE = re.compile(
    rf'(?P<space>\s+)|(?P<alias>{_ALIAS_PATTERN})|(?P<int>[0-9]+)|(?P<name>[A-Za-z][A-Za-z0-9]*)'
    r'|(?P<op>[-+*^/(),\[\]])'
)


@dataclass(frozen=True)
class Token:
    """ ``text`` is canonical (aliases resolved); ``span`` always points at the original input. """
    kind: str
    text: str
    span: Span


def tokenize(text: str) -> List[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            raise ParseError('Unexpected character', text[pos], (pos, pos + 1))
        span = match.span()
        kind = match.lastgroup
        if kind == 'alias':
            tokens.append(Token(NAME, ALIASES[match.group()], span))
        elif kind == 'int':
            tokens.append(Token(INT, match.group(), span))
        elif kind == 'name':
            tokens.append(Token(NAME, match.group(), span))
        elif kind == 'op':
            tokens.append(Token(OP, match.group(), span))
        pos = match.end()
    tokens.append(Token(END, '', (len(text), len(text))))
    return tokens
