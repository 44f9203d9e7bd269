from typing import Iterable

from ladderwood.algebra.operator import OperatorPoly
from ladderwood.expr.lower import lower_operator, lower_text
from ladderwood.expr.parser import parse
from ladderwood.expr.printer import pretty
from ladderwood.helpers.errors import NonAffineExponent
from ladderwood.scalar.field import I
from ladderwood.verify.base import BaseSuite, Case, Outcome, exact_equal, random_operator


CORPUS = (
    'a', 'ad', 'x', 'p', 'H', 'i', 'sqrt2', 'xi', '0', '7', '-3', '3/4', '-5/6',
    'a + ad', 'a - ad', 'a*ad', 'ad*a + 1', 'ad*a + 1/2', 'ad^2*a - 3/2*a + 1',
    'x^2', 'p^2*1/2', '(a + ad)*(a - ad)', '(x + p)^3', 'a^0', '-a', '-x*p', '-(a + ad)', '-1*sqrt2*ad',
    '[a, ad]', '[x, p]', '[a, ad^5]', '[[a, ad], x]', '[H, ad] - ad', '[x^2, p^2]',
    'exp(a)', 'exp(i*xi*p)', 'exp(-i*xi*x)', 'exp(xi*(ad - a)*sqrt2)', 'exp(a)*exp(ad)', 'exp(ad)^3',
    'exp(x*p)', 'i*sqrt2*xi^2*ad*a', '(1/2 + i)*a', '1/2*i*sqrt2*xi - xi^3', '2^3', '(-1)^2', '(3/2)^2',
    '(a^2)^3', 'a*-3/2', 'x - -1/2', '((a))', 'ad*[a, ad]*a', 'H - (ad*a + 1/2)', '(ad*a)*(a*ad)',
)

ALIASES = (
    ('â† * â', 'ad*a'),
    ('[x̂, p̂]', '[x, p]'),
    ('√2*ξ*a†', 'sqrt2*xi*ad'),
    ('Ĥ - 1/2', 'H - 1/2'),
)


def _round_trip(text: str) -> Outcome:
    tree = parse(text)
    printed = pretty(tree)
    return exact_equal(parse(printed), tree)


def _canonical_form_prints_back(operator: OperatorPoly) -> Outcome:
    text = str(operator)
    return exact_equal(pretty(parse(text)), text)


def _non_affine_rejected() -> Outcome:
    parse('exp(x*p)')
    try:
        lower_text('exp(x*p)')
    except NonAffineExponent as e:
        return e.span == (0, 8), f'span {e.span}'
    return False, 'exp(x*p) was lowered'


class ParserSuite(BaseSuite):
    """ Round trips of the expression corpus, alias spellings and a few lowerings. """
    name = 'parser'

    def cases(self) -> Iterable[Case]:
        for text in CORPUS:
            yield f'round trip {text!r}', lambda text=text: _round_trip(text)
        for alias, ascii_text in ALIASES:
            yield f'alias {alias!r}', lambda alias=alias, text=ascii_text: exact_equal(parse(alias), parse(text))

        yield 'a*ad = ad*a + 1', lambda: exact_equal(lower_operator('a*ad'), lower_operator('ad*a + 1'))
        yield 'H = ad*a + 1/2', lambda: exact_equal(lower_operator('H'), lower_operator('ad*a + 1/2'))
        yield '[x, p] = i', lambda: exact_equal(lower_operator('[x, p]'), OperatorPoly.scalar(I))
        yield 'exp(x*p) is not affine', _non_affine_rejected

        rng = self.rng()
        for k in range(self.settings.random_cases):
            operator = random_operator(rng)
            yield f'canonical form #{k}', lambda op=operator: _canonical_form_prints_back(op)
            yield f'canonical form lowers back #{k}', \
                lambda op=operator: exact_equal(lower_operator(str(op)), op)
