"""Exact computations with top local cohomology of cyclic modules R/I.

Polynomial arithmetic and Gröbner bases over Q or F_p, monomial primary
decomposition, the cohomological dimension filtration with both of its
defining computations, the annihilator of H^d_a(R/I), and an independent
Hochster-formula oracle for squarefree monomial ideals.
"""

from .cd import CyclicModule, ann_top, attached_top, cd_table, filtration, h_top_nonzero, t_submodule
from .errors import HypothesisNotMet, ParseError, TheoremViolation, TopcohError
from .groebner import Ideal, intersect, krull_dim, quotient, saturate
from .parser import parse_ideal, parse_polynomial
from .primdec import associated_primes, primary_decomposition
from .ring import GREVLEX, LEX, Polynomial, Ring

__version__ = "0.1.0"
