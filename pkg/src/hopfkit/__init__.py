"""Exact verification engine for a family of 128-dimensional Hopf algebras
over a 16-dimensional Hopf algebra H without the Chevalley property."""

from .scalar import FieldElement, fe, parse_literal, format_literal, ZERO, ONE, XI, ZETA, SQRT2
from .linalg import Matrix, rank, kernel_basis, solve, inverse, kron
from .hopf import FinHopf, Presentation, build_from_presentation, verify_hopf_axioms

__version__ = "0.1.0"
