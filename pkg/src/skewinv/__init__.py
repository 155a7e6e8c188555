"""Invariants of finite matrix groups on exterior, (-1)-skew and symmetric algebras."""

from .algebra import EXTERIOR, SKEW, SYMMETRIC, AlgebraCtx, SkewPoly, graded_basis, mul, substitute
from .arrangements import Arrangement, Subspace, group_arrangement, intersection_ideal, minimal_generators
from .groups import FiniteMatrixGroup, act, enumerate_group, representation_matrix
from .invariants import GeneratorSet, algebra_generators, fixed_space, molien_series, reynolds
from .linalg import RowBasis
from .pipeline import (
    bound_transference_experiment,
    check_gansub,
    invariant_generators_via_arrangement,
    noether_check,
    squarefree_probe,
)

__all__ = [
    "EXTERIOR", "SKEW", "SYMMETRIC", "AlgebraCtx", "SkewPoly", "graded_basis", "mul", "substitute",
    "Arrangement", "Subspace", "group_arrangement", "intersection_ideal", "minimal_generators",
    "FiniteMatrixGroup", "act", "enumerate_group", "representation_matrix",
    "GeneratorSet", "algebra_generators", "fixed_space", "molien_series", "reynolds",
    "RowBasis",
    "bound_transference_experiment", "check_gansub", "invariant_generators_via_arrangement",
    "noether_check", "squarefree_probe",
]

__version__ = "0.1.0"
