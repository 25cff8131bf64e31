"""Finite rings whose two-sided ideal lattices carry residuated structure.

Construction of finite rings (modular, matrix, quotient, product),
computation of the full ideal lattice with products, residuals and
annihilators, axiom checking of the induced algebra, ring classification
and subdirect decomposition, plus an executable statement catalog run
over a corpus of finite instances.
"""

from blrings.kernels import BACKEND
from blrings.rings import FiniteRing, RingValidationError, validate_ring

__all__ = ["BACKEND", "FiniteRing", "RingValidationError", "validate_ring"]
