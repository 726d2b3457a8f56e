"""Depth, mdepth and the maximal depth property of monomial ideals."""

from .errors import BudgetExceeded, DomainError
from .ideal import MonomialIdeal, minimal_generators, polarize, power
from .invariants import (BettiTable, MaxDepth, betti_table, depth, has_maximal_depth,
                         projective_dimension, regularity)
from .primes import alexander_dual, ass, mdepth, minimal_primes
from .parsing import ParseError, parse_ideal

__version__ = "0.1.0"
