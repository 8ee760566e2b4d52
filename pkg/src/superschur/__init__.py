"""Exact characters of irreducible gl(m|n) representations.

Two independent routes - a block Jacobi-Trudi determinant in
supersymmetric complete functions and an alternating sum over the Weyl
group - computed with exact Laurent-polynomial arithmetic.
"""

from .combinatorics import CompositePartition, Partition
from .laurent import LaurentPoly, NonzeroRemainder
from .weights import Weight

__all__ = [
    "CompositePartition", "LaurentPoly", "NonzeroRemainder",
    "Partition", "Weight",
]
