"""Exact cohomology of Lie superalgebras and color Lie algebras over Q."""

from .exactlin import BACKEND, Rational, RationalSparseMatrix
from .grading import CommutationFactor, GradingGroup, super_factor, super_z_factor
from .algebra import EpsLieAlgebra
from .gmodule import GradedModule
from .cohomology import Cochain, CochainComplex, cohomology

__all__ = [
    "BACKEND",
    "Rational",
    "RationalSparseMatrix",
    "CommutationFactor",
    "GradingGroup",
    "super_factor",
    "super_z_factor",
    "EpsLieAlgebra",
    "GradedModule",
    "Cochain",
    "CochainComplex",
    "cohomology",
]

__version__ = "0.1.0"
