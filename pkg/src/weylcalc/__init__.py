"""Exact combinatorics of hyperoctahedral Weyl groups, parabolic subgroups
of Sp_N and GL_N, residue-point exponent calculus and a formal pole-order
ledger.  All arithmetic is over exact rationals; there is no floating point
anywhere in the library.
"""

__version__ = "0.1.0"

from .compositions import (
    Composition,
    SpComposition,
    IntegerInterval,
    compositions_of,
    sp_compositions_of,
    refines,
    consecutive_intervals,
)
from .weyl import SignedPermutation, DPartition
from .exponents import ResidueContext

__all__ = [
    "Composition",
    "SpComposition",
    "IntegerInterval",
    "compositions_of",
    "sp_compositions_of",
    "refines",
    "consecutive_intervals",
    "SignedPermutation",
    "DPartition",
    "ResidueContext",
    "__version__",
]
