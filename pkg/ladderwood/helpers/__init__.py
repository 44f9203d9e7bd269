from ladderwood.helpers.log import log, timed
from ladderwood.helpers.errors import LadderwoodError, DivisionByZero, InvalidArgument, UnsupportedExponent, \
    NonAffineExponent, SpaceMismatch, UnboundIndeterminate, ParseError, VerificationFailure
from ladderwood.helpers.parallelism import get_nr_procs, parallel_map


__all__ = ['log', 'timed', 'LadderwoodError', 'DivisionByZero', 'InvalidArgument', 'UnsupportedExponent',
           'NonAffineExponent', 'SpaceMismatch', 'UnboundIndeterminate', 'ParseError', 'VerificationFailure',
           'get_nr_procs', 'parallel_map']
