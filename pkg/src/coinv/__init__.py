"""Exact computations in the coinvariant algebras of types A and B.

Submodules: ``groups`` (S_n, B_n and their statistics), ``shapes`` (partitions
and tableaux), ``polyring`` (integer polynomials and symmetric functions),
``straighten`` (descent bases and normal forms), ``reptheory`` (characters),
``series`` (truncated power series and generating-function checks),
``checks`` and ``cli``.
"""

from coinv._limits import CapacityError
from coinv.groups import Permutation, SignedPermutation, enumerate_group, perm_stats, signed_stats
from coinv.polyring import IntPolynomial
from coinv.report import Report
from coinv.shapes import BiTableau, StandardTableau
from coinv.straighten import normal_form, straighten

__version__ = "0.1.0"

__all__ = [
    "CapacityError", "Permutation", "SignedPermutation", "enumerate_group", "perm_stats",
    "signed_stats", "IntPolynomial", "Report", "BiTableau", "StandardTableau", "normal_form",
    "straighten",
]
