from fractions import Fraction
from typing import List, Tuple, Union

from ladderwood.algebra.ket import matrix_element
from ladderwood.algebra.operator import commutator
from ladderwood.api.types import VerifySettings
from ladderwood.expr.lower import lower_operator, lower_text
from ladderwood.factorization.ladder import spectrum
from ladderwood.helpers.errors import InvalidArgument
from ladderwood.helpers.log import log
from ladderwood.scalar.radical import RadicalScalar
from ladderwood.verify.runner import report, run_suites
from ladderwood.wavefunction.bra import Space
from ladderwood.wavefunction.derivation import ClosedFormWavefunction, derive_wavefunction
from ladderwood.wavefunction.hermite import HermitePolynomial, hermite_recurrence, hermite_reduction


HERMITE_PATHS = ('recurrence', 'reduction')


def normal_order_text(text: str) -> str:
    """
    Parses an expression and returns its canonical normal-ordered form.

    :param text: expression in the ladderwood surface syntax, e.g. ``"a*ad"``, ``"[x, p]"`` or ``"exp(x)"``.

    :returns: canonical text. Operators parse back to the same operator; group elements print as
        ``exp(c) * exp(F)`` with the scalar prefactor split off the affine exponent.
    """
    return str(lower_text(text))


def commutator_text(left: str, right: str) -> str:
    """ Canonical form of [left, right]. """
    return str(commutator(lower_operator(left), lower_operator(right)))


def matel(m: int, text: str, n: int) -> RadicalScalar:
    """
    Exact matrix element <m|A|n> between normalized number states.

    :returns: a ``RadicalScalar``; its text form is exact, e.g. ``sqrt(3)`` for <3|ad|2>.
    """
    if m < 0 or n < 0:
        raise InvalidArgument(f'Number states are labelled by nonnegative integers, got m={m}, n={n}')
    return matrix_element(m, lower_operator(text), n)


def wavefunction(n: int, space: Union[str, Space] = Space.position) -> ClosedFormWavefunction:
    """
    Closed-form eigenfunction derived with the exponential pipeline; no differential equation is solved.

    :param n: occupation number.
    :param space: 'position' / 'x' or 'momentum' / 'p'.
    """
    if n < 0:
        raise InvalidArgument(f'Occupation numbers are nonnegative, got {n}')
    return derive_wavefunction(n, space)


def hermite(n: int, path: str = 'recurrence') -> HermitePolynomial:
    if path not in HERMITE_PATHS:
        raise InvalidArgument(f'Unknown Hermite path {path!r}, expected one of {HERMITE_PATHS}')
    return hermite_recurrence(n) if path == 'recurrence' else hermite_reduction(n)


def energy_table(nmax: int) -> List[Tuple[int, Fraction]]:
    """ (n, E_n) for n = 0..nmax, read off the factorization ladder. """
    if nmax < 0:
        raise InvalidArgument(f'nmax must be nonnegative, got {nmax}')
    return list(enumerate(spectrum(nmax)))


def verify(suite: str = 'all', settings: Union[VerifySettings, dict] = None,
           nr_procs: int = None) -> Tuple[List[str], bool]:
    """
    Runs the invariant suites.

    :param suite: one suite name or 'all'.
    :param settings: ``VerifySettings`` or a dictionary with any subset of its fields.
    :param nr_procs: worker processes; defaults to a count derived from the available CPUs and memory.

    :returns: the report lines and whether every check passed.
    """ # noqa
    if settings is not None and not isinstance(settings, VerifySettings):
        settings = VerifySettings.from_dict(settings)
    lines, passed = report(run_suites(suite, settings, nr_procs))
    if not passed:
        log.error('At least one verification check failed')
    return lines, passed
