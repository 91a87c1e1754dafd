"""motivecalc: an exact-arithmetic engine for Chow and non-commutative motives.

The computable universe is finite disjoint unions of products of
projective spaces.  On that universe the engine realizes, with exact
rational arithmetic throughout:

* Chow rings, correspondences and their composition calculus;
* rational K-theory with the Chern character, Todd classes and the
  Grothendieck-Riemann-Roch transform;
* four categories of motives (Chow, twistless Chow, the orbit category
  that collapses Tate twists, and K-theoretic/non-commutative motives)
  together with the bridge functors between them;
* Schur functors, symmetric/alternating powers and finiteness tests;
* Grothendieck rings, a scissor-relation ledger, motivic measures;
* motivic zeta functions, both intrinsic and measure-valued.

See README.md for the claim checklist the test suite verifies.
"""

from fractions import Fraction

from .quotient import QuotientRing, RingElement
from .series import LaurentPolynomial, TruncatedSeries, INTEGERS, RATIONALS, LAURENT, L
from .linalg import RationalMatrix, rank_of_sparse_rows

__all__ = [
    "Fraction",
    "QuotientRing",
    "RingElement",
    "LaurentPolynomial",
    "TruncatedSeries",
    "INTEGERS",
    "RATIONALS",
    "LAURENT",
    "L",
    "RationalMatrix",
    "rank_of_sparse_rows",
]

__version__ = "0.1.0"
