"""catdet: exact verification of determinant and sum identities for
Catalan-style combinatorial families.

The package provides exact scalar arithmetic (arbitrary-precision integers
and rationals), a Laurent polynomial ring in q with half-integer exponents,
exact dense linear algebra (fraction-free Bareiss, Dodgson condensation,
inverses and null-space checks), a three-term-recurrence engine for monic
orthogonal polynomials and their moment tables, a registry of executable
identity checks, residue-lift determinant experiments with conjecture
searches, and a command line front end.
"""

from catdet.exact import ExactInt, ExactRat, binomial
from catdet.qseries import QPoly, QRat, q_binomial, q_factorial, q_int, q_pochhammer
from catdet.linalg import (
    Matrix,
    det_bareiss,
    det_cofactor,
    det_condensation,
    inverse,
    nullspace_vector_check,
)

__all__ = [
    "ExactInt",
    "ExactRat",
    "binomial",
    "QPoly",
    "QRat",
    "q_int",
    "q_factorial",
    "q_binomial",
    "q_pochhammer",
    "Matrix",
    "det_bareiss",
    "det_condensation",
    "det_cofactor",
    "inverse",
    "nullspace_vector_check",
]
